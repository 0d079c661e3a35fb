//! Command-line front end: `.optic` workspaces, the subcommands and the
//! renderers.

pub mod commands;
pub mod error;
pub mod render;
pub mod suites;
pub mod workspace;

/// The regression corpus, embedded so suites run without the source tree.
pub const CORPUS: &[(&str, &str)] = &[
    ("lenses.optic", include_str!("../corpus/lenses.optic")),
    ("snakes.optic", include_str!("../corpus/snakes.optic")),
    ("crossings.optic", include_str!("../corpus/crossings.optic")),
    ("kleisli.optic", include_str!("../corpus/kleisli.optic")),
    ("unlawful.optic", include_str!("../corpus/unlawful.optic")),
];
