//! Forward parametrizations, the uv substitution and the Descartes bijection.

mod eval;
mod params;
mod tuples;

pub use eval::{
    eval_descartes, eval_quadruple, eval_quadruple_carmichael, eval_quintuple, eval_sextuple,
    eval_sextuple_h, eval_triple, eval_uv_quadruple, eval_uv_quintuple, eval_uv_sextuple,
    quint_to_uv_params, quint_uv_y, quintuple_suppressed_x4,
};
pub use params::{
    CarmichaelParams, DescartesParams, QuadParams, QuadUVParams, QuintParams, QuintUVParams,
    SextParams, SextUVParams, TripleParams, TripleVariant,
};
pub use tuples::{
    descartes_defect, descartes_to_uv, pyth_to_uv, uv_to_descartes, uv_to_pyth,
    DescartesQuadruple, PythTuple,
};
