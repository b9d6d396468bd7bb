//! Round trip of a scene through the JSON file format, and what the loader
//! says about a bad file.

use sodvis::scene::{eight_edge_scene, parse_scene, scene_to_json};

fn main() {
    let s = eight_edge_scene();
    let text = scene_to_json(&s, false);
    println!("{}", text.lines().take(12).collect::<Vec<_>>().join("\n"));
    println!("...");
    let back = parse_scene(&text).expect("own output parses");
    println!("round trip equal: {}", back.scene == s);

    let overlapping = r#"{"polygons": [
        {"id": "a", "vertices": [[0,0,0],[4,0,0],[0,4,0]]},
        {"id": "b", "vertices": [[1,1,0],["9/2",1,0],[1,"9/2",0]]}
    ]}"#;
    let l = parse_scene(overlapping).expect("well formed");
    println!("overlapping pair: {:?}", l.report.violations);

    let broken = r#"{"polygons": [{"id": "a", "vertices": [[0,0,0],[1,0],[0,1,0]]}]}"#;
    match parse_scene(broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("rejected: {e}"),
    }
}
