//! Composing two-colored Petri nets: places and transitions are typed by
//! color, and permutations may only shuffle positions of the same color.

use netop::colored::{ColorWord, PetriModel, PetriNet};
use netop::netmodel::NetworkModel;
use netop::operad::{NetworkOperad, Profile};
use netop::oracle::{all_passed, check_operad, CheckConfig};
use netop::Permutation;

fn main() -> netop::Result<()> {
    let model = PetriModel::default();
    let operad = NetworkOperad::new(model.clone());

    // place 1 feeds transition 1
    let consume = model.element(
        ColorWord::new(["p", "t"]),
        PetriNet::new(1, 1, vec![vec![1]], vec![vec![0]])?,
    )?;
    // transition 1 produces two tokens in place 1
    let produce = model.element(
        ColorWord::new(["t", "p"]),
        PetriNet::new(1, 1, vec![vec![0]], vec![vec![2]])?,
    )?;

    // Put both places first, then link the first transition to the second place.
    let output = ColorWord::new(["p", "p", "t", "t"]);
    let glue = model.element(
        output.clone(),
        PetriNet::new(2, 2, vec![vec![0, 0], vec![0, 0]], vec![vec![0, 0], vec![1, 0]])?,
    )?;
    let f = operad.make_operation(
        Profile::new(
            vec![ColorWord::new(["p", "t"]), ColorWord::new(["t", "p"])],
            output,
        ),
        Permutation::from_images(&[1, 3, 4, 2])?,
        glue,
    )?;
    let leaves = [consume, produce];
    let gs: Vec<_> = leaves.iter().map(|c| operad.identity_op(&c.word)).collect();
    let composed = operad.compose(&f, &gs)?;
    println!(
        "composite profile: {:?} -> {}",
        composed
            .inputs()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>(),
        composed.output()
    );

    let net = model.overlay(
        composed.net(),
        &model.act(composed.perm(), &model.djunion_all(&leaves)?)?,
    )?;
    println!("word:   {}", net.word);
    println!("input:  {:?}", net.net.input());
    println!("output: {:?}", net.net.output());

    let reports = check_operad(
        &operad,
        &CheckConfig {
            max_n: 5,
            samples: 200,
            ..CheckConfig::default()
        },
    );
    println!("operad laws for petri: all passed = {}", all_passed(&reports));
    Ok(())
}
