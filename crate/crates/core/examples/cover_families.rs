//! Irredundant covers, point bases, and the reflection relation.
//!
//! cargo run --example cover_families

use topogame::covers::{
    all_covers, cover_members, is_reflection, is_selection_basis, point_base_family,
    reduced_covers, CoverKind,
};
use topogame::FiniteSpace;

const CAP: usize = 1_000_000;

fn main() -> topogame::Result<()> {
    let space = FiniteSpace::from_json(r#"{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}"#)?;
    for kind in [CoverKind::Open, CoverKind::Clopen] {
        let reduced = reduced_covers(&space, kind, CAP)?;
        let all = all_covers(&space, kind, CAP)?;
        println!(
            "{kind:?}: {} irredundant of {} covers",
            reduced.len(),
            all.len()
        );
        for cover in &reduced {
            let members: Vec<String> = cover.members().iter().map(ToString::to_string).collect();
            println!("  {{{}}}", members.join(", "));
        }
        let basis = is_selection_basis(&cover_members(&reduced), &cover_members(&all));
        println!("  irredundant covers form a selection basis: {basis}");
        let points = point_base_family(&space, kind)?;
        for (x, menu) in points.menus.iter().enumerate() {
            let sets: Vec<String> = menu.iter().map(ToString::to_string).collect();
            println!("  point base at {x}: {}", sets.join(" "));
        }
        println!(
            "  point base reflects all covers: {}",
            is_reflection(&points, &cover_members(&all), CAP)?
        );
    }
    Ok(())
}
