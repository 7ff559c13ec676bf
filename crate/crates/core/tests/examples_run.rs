//! The examples double as smoke tests: each is compiled in here and its `main` run.

mod dt_series {
    include!("../examples/dt_series.rs");
    pub fn run() {
        main()
    }
}
mod hyperelliptic_table {
    include!("../examples/hyperelliptic_table.rs");
    pub fn run() {
        main()
    }
}
mod isogeny_counts {
    include!("../examples/isogeny_counts.rs");
    pub fn run() {
        main()
    }
}
mod modular_identity {
    include!("../examples/modular_identity.rs");
    pub fn run() {
        main()
    }
}
mod quasimodular_fit {
    include!("../examples/quasimodular_fit.rs");
    pub fn run() {
        main()
    }
}
mod series_arithmetic {
    include!("../examples/series_arithmetic.rs");
    pub fn run() {
        main()
    }
}
mod series_json {
    include!("../examples/series_json.rs");
    pub fn run() {
        main()
    }
}
mod series_reversion {
    include!("../examples/series_reversion.rs");
    pub fn run() {
        main()
    }
}
mod surface_counts {
    include!("../examples/surface_counts.rs");
    pub fn run() {
        main()
    }
}
mod theta_two_forms {
    include!("../examples/theta_two_forms.rs");
    pub fn run() {
        main()
    }
}
mod threefold_multiple_cover {
    include!("../examples/threefold_multiple_cover.rs");
    pub fn run() {
        main()
    }
}
mod verify_registry {
    include!("../examples/verify_registry.rs");
    pub fn run() {
        main()
    }
}

#[test]
fn examples_run() {
    dt_series::run();
    hyperelliptic_table::run();
    isogeny_counts::run();
    modular_identity::run();
    quasimodular_fit::run();
    series_arithmetic::run();
    series_json::run();
    series_reversion::run();
    surface_counts::run();
    theta_two_forms::run();
    threefold_multiple_cover::run();
    verify_registry::run();
}
