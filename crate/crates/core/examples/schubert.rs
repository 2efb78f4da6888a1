//! Finite permutations: classic pipe dreams, heaps and skew shapes.

use poslab::schubert::{all_perms, is_321_avoiding, schubert_smooth_at, skew_shape, square_pipe_dreams};

fn main() -> poslab::Result<()> {
    println!("2143 has {} pipe dreams", square_pipe_dreams(&[2, 1, 4, 3])?.len());
    let v = [3, 4, 1, 2];
    let s = skew_shape(&v)?;
    println!("skew shape of {v:?}: {} cells, word {:?}", s.len(), s.word());
    for w in all_perms(4) {
        let verdict = schubert_smooth_at(&w, &v)?;
        println!("{w:?}: {:?} ({} pipe dreams)", verdict.status, verdict.multiplicity);
    }
    let avoiding = all_perms(5).iter().filter(|w| is_321_avoiding(w)).count();
    println!("{avoiding} permutations of 5 avoid 321");
    Ok(())
}
