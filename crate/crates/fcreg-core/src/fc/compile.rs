//! Structural translation from SF(R) expressions to FC sentences.
//!
//! For each expression `e` a formula `phi_e(x)` holds exactly when the value
//! of `x` lies in the language of `e`; the top-level sentence binds `x` and
//! adds a maximality wrapper forcing `x` to be the whole input word: every
//! factor extending `x` on either side must extend it by the empty word.
//!
//! The word-star case follows the commuting-words argument: for a primitive
//! root `r`, a nonempty factor `x` with `x = y.r = r.y` is a power of `r`,
//! and `x = z^p` then pins the exponent to a multiple of `p`. As literally
//! stated that formula forces `|x| >= |r|`, excluding the empty word even
//! though `eps` is in `w*`; the translation therefore adds an explicit
//! `x = eps` disjunct.
//!
//! The `z^p` shorthand is expanded by a doubling chain with fresh variables
//! (`t = z^k`, then squaring, then one extra `z` for odd exponents), keeping
//! the formula size logarithmic in `p`. Every intermediate power is a prefix
//! of `x`, hence a factor of the input word, so the existentials can always
//! be satisfied.

use super::{FcFormula, FcTerm};
use crate::sfr::SfrExpr;
use crate::words;

struct FreshVars {
    next: usize,
}

impl FreshVars {
    fn new() -> FreshVars {
        FreshVars { next: 0 }
    }

    fn fresh(&mut self) -> String {
        let v = format!("x{}", self.next);
        self.next += 1;
        v
    }
}

fn var(name: &str) -> FcTerm {
    FcTerm::Var(name.to_string())
}

fn atom(x: FcTerm, y: FcTerm, z: FcTerm) -> FcFormula {
    FcFormula::Atom(x, y, z)
}

/// `target = word` for a concrete nonempty word, spelled letter by letter
/// with fresh variables for the suffixes.
fn const_word(target: &str, word: &str, vars: &mut FreshVars) -> FcFormula {
    let chars: Vec<char> = word.chars().collect();
    debug_assert!(!chars.is_empty());
    if chars.len() == 1 {
        return atom(var(target), FcTerm::Letter(chars[0]), FcTerm::Epsilon);
    }
    let rest = vars.fresh();
    let suffix: String = chars[1..].iter().collect();
    FcFormula::exists(
        rest.clone(),
        FcFormula::and(
            atom(var(target), FcTerm::Letter(chars[0]), var(&rest)),
            const_word(&rest, &suffix, vars),
        ),
    )
}

/// `target = base^p` via squaring, for `p >= 1`.
fn power_of(target: &str, base: &str, p: usize, vars: &mut FreshVars) -> FcFormula {
    match p {
        1 => atom(var(target), var(base), FcTerm::Epsilon),
        2 => atom(var(target), var(base), var(base)),
        p if p % 2 == 0 => {
            let half = vars.fresh();
            FcFormula::exists(
                half.clone(),
                FcFormula::and(
                    power_of(&half, base, p / 2, vars),
                    atom(var(target), var(&half), var(&half)),
                ),
            )
        }
        p => {
            let half = vars.fresh();
            let squared = vars.fresh();
            FcFormula::exists(
                half.clone(),
                FcFormula::and(
                    power_of(&half, base, p / 2, vars),
                    FcFormula::exists(
                        squared.clone(),
                        FcFormula::and(
                            atom(var(&squared), var(&half), var(&half)),
                            atom(var(target), var(&squared), var(base)),
                        ),
                    ),
                ),
            )
        }
    }
}

fn compile_expr(e: &SfrExpr, x: &str, vars: &mut FreshVars) -> FcFormula {
    match e {
        SfrExpr::Letter(c) => atom(var(x), FcTerm::Letter(*c), FcTerm::Epsilon),
        SfrExpr::Empty => FcFormula::not(atom(var(x), var(x), FcTerm::Epsilon)),
        SfrExpr::WordStar(w) if w.is_empty() => atom(var(x), FcTerm::Epsilon, FcTerm::Epsilon),
        SfrExpr::WordStar(w) => {
            let root = words::primitive_root(w).expect("nonempty word").root;
            let p = w.chars().count() / root.chars().count();
            let rv = vars.fresh();
            let y = vars.fresh();
            let z = vars.fresh();
            let nonempty_case = FcFormula::exists(
                rv.clone(),
                FcFormula::and(
                    const_word(&rv, &root, vars),
                    FcFormula::exists(
                        y.clone(),
                        FcFormula::and(
                            FcFormula::and(
                                atom(var(x), var(&y), var(&rv)),
                                atom(var(x), var(&rv), var(&y)),
                            ),
                            FcFormula::exists(z.clone(), power_of(x, &z, p, vars)),
                        ),
                    ),
                ),
            );
            FcFormula::or(atom(var(x), FcTerm::Epsilon, FcTerm::Epsilon), nonempty_case)
        }
        SfrExpr::Union(a, b) => FcFormula::or(compile_expr(a, x, vars), compile_expr(b, x, vars)),
        SfrExpr::Complement(a) => FcFormula::not(compile_expr(a, x, vars)),
        SfrExpr::Concat(a, b) => {
            let x1 = vars.fresh();
            let x2 = vars.fresh();
            FcFormula::exists(
                x1.clone(),
                FcFormula::exists(
                    x2.clone(),
                    FcFormula::and(
                        atom(var(x), var(&x1), var(&x2)),
                        FcFormula::and(compile_expr(a, &x1, vars), compile_expr(b, &x2, vars)),
                    ),
                ),
            )
        }
    }
}

/// The sentence is true on exactly the words in the expression's language.
pub fn compile_sfr_to_fc(e: &SfrExpr) -> FcFormula {
    let mut vars = FreshVars::new();
    let x = vars.fresh();
    let body = compile_expr(e, &x, &mut vars);
    let y = vars.fresh();
    let z = vars.fresh();
    // x is the whole word: any factor extending x on either side extends it
    // by the empty word.
    let maximal = FcFormula::forall(
        y.clone(),
        FcFormula::forall(
            z.clone(),
            FcFormula::or(
                FcFormula::not(FcFormula::or(
                    atom(var(&y), var(&x), var(&z)),
                    atom(var(&y), var(&z), var(&x)),
                )),
                atom(var(&z), FcTerm::Epsilon, FcTerm::Epsilon),
            ),
        ),
    );
    FcFormula::exists(x, FcFormula::and(body, maximal))
}
