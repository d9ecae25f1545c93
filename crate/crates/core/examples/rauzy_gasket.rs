//! The fully subtractive system on the triangle: depth-5 partition and the
//! cloud of attracting fixed points, written as SVG files.
//!
//! `cargo run --release --example rauzy_gasket -- out_dir`

use std::path::{Path, PathBuf};

use simplex_split::ifs::example5;
use simplex_split::render::{fixed_point_cloud_scene, partition_scene, Style, DEFAULT_PROXIMALITY_MARGIN};

pub fn run_example_in(dir: &Path) -> simplex_split::Result<(usize, usize)> {
    let ifs = example5();
    let style = Style::default();
    let partition = partition_scene(&ifs, 5)?;
    let cloud = fixed_point_cloud_scene(&ifs, 7, DEFAULT_PROXIMALITY_MARGIN)?;
    let write = |name: &str, svg: String| {
        let path = dir.join(name);
        std::fs::write(&path, svg).expect("output directory is writable");
        println!("wrote {}", path.display());
    };
    write("gasket_partition.svg", partition.to_svg(&style));
    write("gasket_cloud.svg", cloud.to_svg(&style));
    println!(
        "{} cylinders, {} fixed points",
        partition.polygons.len(),
        cloud.points.len()
    );
    Ok((partition.polygons.len(), cloud.points.len()))
}

pub fn run_example() -> simplex_split::Result<(usize, usize)> {
    run_example_in(&std::env::temp_dir())
}

#[allow(dead_code)]
fn main() -> simplex_split::Result<()> {
    let dir = std::env::args().nth(1).map_or_else(std::env::temp_dir, PathBuf::from);
    run_example_in(&dir).map(|_| ())
}
