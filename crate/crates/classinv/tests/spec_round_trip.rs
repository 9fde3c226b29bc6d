use classinv::{format_module_spec, parse_module_spec};
use classinv_core::partition::enumerate_partitions;
use classinv_core::{ModuleSpec, Partition};
use proptest::prelude::*;

fn arb_spec() -> impl Strategy<Value = ModuleSpec> {
    (1usize..=5).prop_flat_map(|n| {
        let shapes: Vec<Partition> = (0..=5).flat_map(|s| enumerate_partitions(s, n)).collect();
        proptest::collection::vec((proptest::sample::select(shapes), 1u32..=4), 0..=4)
            .prop_map(move |c| ModuleSpec::new(n, c).unwrap())
    })
}

proptest! {
    #[test]
    fn format_then_parse(spec in arb_spec()) {
        let text = format_module_spec(&spec);
        prop_assert_eq!(parse_module_spec(&text, spec.n()).unwrap(), spec);
    }

    #[test]
    fn parser_never_panics(text in "[ VSL0-9\\[\\],*+()]{0,20}") {
        let _ = parse_module_spec(&text, 3);
    }
}
