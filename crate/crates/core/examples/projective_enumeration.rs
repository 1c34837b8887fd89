//! Subspace arithmetic and constrained enumeration in PG(n,q).

use flagkneser::projective::{Constraints, ProjectiveSpace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = ProjectiveSpace::new(6, 2)?;
    let p = space.point(&[1, 0, 0, 0, 0, 0, 0])?;
    let q = space.parse_subspace("0;0,1,0,0,0,0,0")?;
    let line = space.span(&p, &q)?;
    println!("line {line} has {} points", space.points_of(&line).len());

    let h = space.coordinate_subspace(&[0, 1, 2, 3, 4, 5]);
    let e = space.coordinate_subspace(&[0, 4, 6]);
    println!("meet of {h} and {e} is {}", space.meet(&h, &e)?);
    println!("dual of the hyperplane is the point {}", space.dualize(&h)?);

    println!("planes of PG(6,2): {}", space.count(2, Constraints::none())?);
    println!("solids inside the hyperplane: {}", space.count(3, Constraints::none().within(&h))?);
    println!("solids through the line: {}", space.count(3, Constraints::none().contains(&line))?);

    let pg3 = ProjectiveSpace::new(3, 2)?;
    let pt = pg3.coordinate_subspace(&[0]);
    let skew = pg3.coordinate_subspace(&[2, 3]);
    let lines = pg3.enumerate(1, Constraints::none().contains(&pt).skew_to(&skew))?;
    println!("lines of PG(3,2) through {pt} skew to {skew}:");
    for l in &lines {
        println!("  {l}");
    }
    Ok(())
}
