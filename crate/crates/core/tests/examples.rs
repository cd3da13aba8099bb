macro_rules! example_test {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(
    root_system_example,
    "root_system.rs",
    root_system_example_runs
);
example_test!(irrep_example, "irrep.rs", irrep_example_runs);
example_test!(
    chart_sections_example,
    "chart_sections.rs",
    chart_sections_example_runs
);
example_test!(valuations_example, "valuations.rs", valuations_example_runs);
example_test!(
    crystal_strings_example,
    "crystal_strings.rs",
    crystal_strings_example_runs
);
example_test!(polytopes_example, "polytopes.rs", polytopes_example_runs);
example_test!(
    verify_case_example,
    "verify_case.rs",
    verify_case_example_runs
);
