//! Conjugacy of Coxeter elements in affine A3 by toric equivalence.
use toric_posets::coxeter::{conjugacy_class_elements, coxeter_conjugate, initial_segments, CoxeterSystem};

fn main() -> toric_posets::Result<()> {
    let cs = CoxeterSystem::affine_a(4);
    let c = cs.parse_word("s1,s2,s3,s4")?;
    let c2 = cs.parse_word("s1,s3,s2,s4")?;
    println!("s1s2s3s4 ~ s1s3s2s4: {}", coxeter_conjugate(&cs, &c, &c2));
    for (o, words) in conjugacy_class_elements(&cs, &c2)? {
        let spelled: Vec<String> = words.iter().map(|w| cs.format_word(w)).collect();
        println!("{} : {}", o.describe(), spelled.join(" = "));
    }
    println!("initial segments of s1s2s3s4: {}", initial_segments(&cs, &c)?.len());
    Ok(())
}
