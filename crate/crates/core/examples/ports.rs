//! Devices with a fixed number of ports, linked by a sequence of connection
//! attempts. An attempt succeeds only if both ends still have a free port, so
//! the order of attempts matters.

use netop::algebra::{Algebra, AttemptSequence, DegreeLimited, PortedNetwork};
use netop::operad::Profile;
use netop::Permutation;

fn run(alg: &DegreeLimited, ports: &[u32], attempts: &[(usize, usize)]) -> netop::Result<PortedNetwork> {
    let n = ports.len();
    let f = alg.operad().make_operation(
        Profile::new(vec![n], n),
        Permutation::identity(n),
        AttemptSequence::new(n, attempts.iter().copied())?,
    )?;
    alg.act(&f, &[PortedNetwork::bare(ports.to_vec())])
}

fn main() -> netop::Result<()> {
    let alg = DegreeLimited::default();
    // a hub with two ports and three single-port devices
    let ports = [2, 1, 1, 1];
    for attempts in [
        [(1, 2), (1, 3), (1, 4)],
        [(1, 4), (1, 3), (1, 2)],
        [(2, 3), (1, 2), (1, 4)],
    ] {
        let result = run(&alg, &ports, &attempts)?;
        println!("{attempts:?} -> {:?}", result.graph().edges().collect::<Vec<_>>());
    }

    // Composing two attempt words runs the inner one first.
    let n = ports.len();
    let operad = alg.operad();
    let outer = operad.make_operation(
        Profile::new(vec![n], n),
        Permutation::identity(n),
        AttemptSequence::new(n, [(1, 2)])?,
    )?;
    let inner = operad.make_operation(
        Profile::new(vec![n], n),
        Permutation::identity(n),
        AttemptSequence::new(n, [(1, 3), (1, 4)])?,
    )?;
    let both = operad.compose(&outer, &[inner])?;
    println!("composed word: {:?}", both.net().attempts());
    let result = alg.act(&both, &[PortedNetwork::bare(ports.to_vec())])?;
    println!("-> {:?}", result.graph().edges().collect::<Vec<_>>());
    Ok(())
}
