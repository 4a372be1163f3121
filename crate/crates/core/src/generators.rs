//! Constructors for the named graphs and graph families.
//!
//! Index conventions:
//!
//! * `path`, `cycle`: consecutive vertices `0..n`.
//! * `star(k)`: centre `0`, leaves `1..=k`.
//! * `complete_bipartite(a, b)`: parts `0..a` and `a..a+b`.
//! * `cocktail_party(k)`: `K_{2k}` minus the matching `{2i, 2i+1}`.
//! * `comb(n)`: spine `v_1..v_k` at `0..k` with `k = ⌈n/3⌉`; the two tooth
//!   vertices hanging from `v_i` (`i < k`) sit at `k+2i` (next to the spine)
//!   and `k+2i+1` (the leaf); the tail of `n - 3k + 2` vertices hangs off `v_k`
//!   and takes the remaining indices in path order.
//! * `grs(r, s)`: `x_1=0, x_2=1, x_3=2`, then `y_1..y_r`, then `z_1..z_s`.
//! * `hk(s_1..s_k)`: cycle `0..k`, then the independent blocks in order; block
//!   `i` is joined to cycle vertices `i` and `i+1 mod k`.
//! * `fig1_tree`: `0` is the degree-3 vertex, `0-1-2-3` the long arm, `4, 5` leaves.
//! * `fig2_planar`: vertex `0` is the hub of degree 4, `1..=4` its neighbours,
//!   `5..=8` the outer 4-cycle.
//! * `fig4_twocycles`: shared vertex `0`, cycles `0-1-2-3-4-0` and `0-5-6-7-8-0`.
//! * `fig6_spider`: spine `0..9`, pendants `9,10` on `1`, `11,12` on `4`,
//!   `13,14` on `7`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}` with `k` leaves.
    Star(usize),
    CompleteBipartite(usize, usize),
    CocktailParty(usize),
    Comb(usize),
    Grs(usize, usize),
    /// Block sizes `s_1..s_k`; `k` is the cycle length.
    Hk(Vec<usize>),
    Fig1Tree,
    Fig2Planar,
    Fig4TwoCycles,
    Fig6Spider,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Complete(_) => "complete",
            Self::Empty(_) => "empty",
            Self::Path(_) => "path",
            Self::Cycle(_) => "cycle",
            Self::Star(_) => "star",
            Self::CompleteBipartite(..) => "complete_bipartite",
            Self::CocktailParty(_) => "cocktail_party",
            Self::Comb(_) => "comb",
            Self::Grs(..) => "grs",
            Self::Hk(_) => "hk",
            Self::Fig1Tree => "fig1_tree",
            Self::Fig2Planar => "fig2_planar",
            Self::Fig4TwoCycles => "fig4_twocycles",
            Self::Fig6Spider => "fig6_spider",
        }
    }

    /// Parses `family` plus integer parameters, e.g. `["hk", "4", "3", "2", "3", "2"]`.
    /// For `hk` the first parameter is `k` and the next `k` are block sizes.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let (name, rest) = tokens.split_first().ok_or_else(|| Error::InvalidFamily("missing family name".into()))?;
        let name = name.as_ref();
        let params: Vec<usize> = rest
            .iter()
            .map(|t| t.as_ref().parse::<usize>().map_err(|_| Error::InvalidFamily(format!("bad parameter `{}`", t.as_ref()))))
            .collect::<Result<_>>()?;
        let need = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let spec = match name {
            "complete" => need(1).map(|_| Self::Complete(params[0]))?,
            "empty" => need(1).map(|_| Self::Empty(params[0]))?,
            "path" => need(1).map(|_| Self::Path(params[0]))?,
            "cycle" => need(1).map(|_| Self::Cycle(params[0]))?,
            "star" => need(1).map(|_| Self::Star(params[0]))?,
            "complete_bipartite" => need(2).map(|_| Self::CompleteBipartite(params[0], params[1]))?,
            "cocktail_party" => need(1).map(|_| Self::CocktailParty(params[0]))?,
            "comb" => need(1).map(|_| Self::Comb(params[0]))?,
            "grs" => need(2).map(|_| Self::Grs(params[0], params[1]))?,
            "hk" => {
                let k = *params.first().ok_or_else(|| Error::InvalidFamily("hk needs k".into()))?;
                need(k + 1)?;
                Self::Hk(params[1..].to_vec())
            }
            "fig1_tree" => need(0).map(|_| Self::Fig1Tree)?,
            "fig2_planar" => need(0).map(|_| Self::Fig2Planar)?,
            "fig4_twocycles" => need(0).map(|_| Self::Fig4TwoCycles)?,
            "fig6_spider" => need(0).map(|_| Self::Fig6Spider)?,
            other => return Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "K_{n}"),
            Self::Empty(n) => write!(f, "N_{n}"),
            Self::Path(n) => write!(f, "P_{n}"),
            Self::Cycle(n) => write!(f, "C_{n}"),
            Self::Star(k) => write!(f, "K_{{1,{k}}}"),
            Self::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            Self::CocktailParty(k) => write!(f, "CP_{k}"),
            Self::Comb(n) => write!(f, "T_{n}"),
            Self::Grs(r, s) => write!(f, "G_{{{r},{s}}}"),
            Self::Hk(s) => write!(f, "H_{}{:?}", s.len(), s),
            other => f.write_str(other.name()),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match *spec {
        Complete(n) => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        Empty(n) => Ok(Graph::empty(n)),
        Path(n) => {
            if n < 1 {
                return Err(invalid("path needs n >= 1"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Star(k) => {
            if k < 1 {
                return Err(invalid("star needs at least one leaf"));
            }
            Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
        }
        CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(invalid("complete_bipartite needs both parts nonempty"));
            }
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        CocktailParty(k) => {
            if k < 1 {
                return Err(invalid("cocktail_party needs k >= 1"));
            }
            let n = 2 * k;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).filter(move |&v| v != (u ^ 1)).map(move |v| (u, v))))
        }
        Comb(n) => comb(n),
        Grs(r, s) => {
            if r < 1 || s < 1 {
                return Err(invalid("grs needs r, s >= 1"));
            }
            let mut e = vec![(1, 2)];
            for i in 0..r {
                e.push((0, 3 + i));
                e.push((1, 3 + i));
            }
            for i in 0..s {
                e.push((0, 3 + r + i));
                e.push((2, 3 + r + i));
            }
            Graph::from_edges(3 + r + s, e)
        }
        Hk(ref sizes) => {
            let k = sizes.len();
            if k < 3 || sizes.iter().any(|&s| s < 1) {
                return Err(invalid("hk needs k >= 3 and every block size >= 1"));
            }
            let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let mut next = k;
            for (i, &s) in sizes.iter().enumerate() {
                for _ in 0..s {
                    e.push((i, next));
                    e.push(((i + 1) % k, next));
                    next += 1;
                }
            }
            Graph::from_edges(next, e)
        }
        Fig1Tree => Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5)]),
        Fig2Planar => Graph::from_edges(
            9,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (1, 6),
                (2, 6),
                (2, 7),
                (3, 7),
                (3, 8),
                (4, 5),
                (4, 8),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 5),
            ],
        ),
        Fig4TwoCycles => Graph::from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]),
        Fig6Spider => {
            let mut e: Vec<(usize, usize)> = (1..9).map(|i| (i - 1, i)).collect();
            for (j, &s) in [1usize, 4, 7].iter().enumerate() {
                e.push((s, 9 + 2 * j));
                e.push((s, 10 + 2 * j));
            }
            Graph::from_edges(15, e)
        }
    }
}

fn comb(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid("comb needs n >= 4"));
    }
    let k = n.div_ceil(3);
    let tail = n + 2 - 3 * k;
    let mut e: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    for i in 0..k - 1 {
        let mid = k + 2 * i;
        e.push((i, mid));
        e.push((mid, mid + 1));
    }
    let mut prev = k - 1;
    let mut next = k + 2 * (k - 1);
    for _ in 0..tail {
        e.push((prev, next));
        prev = next;
        next += 1;
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, e)
}

/// Connected random graph: a random spanning tree first, then every other
/// pair independently with probability `p`. Deterministic in `seed`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("random_connected needs n >= 1"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid("random_connected needs 0 < p <= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for i in 1..n {
        let u = order[i];
        let v = order[rng.gen_range(0..i)];
        present[u][v] = true;
        present[v][u] = true;
        edges.push((u.min(v), u.max(v)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn comb_six_is_a_path() {
        let t6 = g(FamilySpec::Comb(6));
        assert_eq!(sorted_degrees(&t6), sorted_degrees(&g(FamilySpec::Path(6))));
        assert!(t6.is_tree());
        assert_eq!(t6.diameter(), Some(5));
    }

    #[test]
    fn comb_is_a_tree_of_order_n() {
        for n in 4..=30 {
            let t = g(FamilySpec::Comb(n));
            assert_eq!(t.n(), n);
            assert_eq!(t.m(), n - 1);
            assert!(t.is_tree(), "T_{n}");
        }
    }

    #[test]
    fn comb_seven_layout() {
        let t7 = g(FamilySpec::Comb(7));
        // spine 0-1-2, teeth 0-3-4 and 1-5-6, no tail
        let expected = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (1, 5), (5, 6)]).unwrap();
        assert_eq!(t7, expected);
    }

    #[test]
    fn grs_degrees() {
        for (r, s) in [(1, 1), (2, 3), (4, 4)] {
            let x = g(FamilySpec::Grs(r, s));
            assert_eq!(x.n(), 3 + r + s);
            assert_eq!(x.degree(0), r + s);
            assert_eq!(x.degree(1), r + 1);
            assert_eq!(x.degree(2), s + 1);
            assert!((3..3 + r + s).all(|v| x.degree(v) == 2));
        }
        assert_eq!(g(FamilySpec::Grs(4, 4)).degree(0), 8);
    }

    #[test]
    fn cocktail_party_two_is_c4() {
        let cp = g(FamilySpec::CocktailParty(2));
        assert_eq!(sorted_degrees(&cp), vec![2, 2, 2, 2]);
        assert!(cp.is_connected());
        assert_eq!(cp.m(), 4);
    }

    #[test]
    fn hk_figure_instance() {
        let h = g(FamilySpec::Hk(vec![3, 2, 3, 2]));
        assert_eq!(h.n(), 14);
        assert_eq!(h.min_degree(), Some(2));
        assert_eq!(h.m(), 4 + 2 * 10);
        for sizes in [vec![1, 1, 1], vec![2, 1, 3, 1, 1]] {
            assert_eq!(g(FamilySpec::Hk(sizes)).min_degree(), Some(2));
        }
    }

    #[test]
    fn figure_graphs() {
        let t = g(FamilySpec::Fig1Tree);
        assert_eq!(t.n(), 6);
        assert!(t.is_tree());
        // the drawing has one vertex of degree three and a path of length three
        assert_eq!(sorted_degrees(&t), vec![1, 1, 1, 2, 2, 3]);

        let p = g(FamilySpec::Fig2Planar);
        assert_eq!(p.n(), 9);
        assert_eq!(p.diameter(), Some(2));
        assert!(p.m() <= 3 * p.n() - 6);

        let c = g(FamilySpec::Fig4TwoCycles);
        assert_eq!(c.n(), 9);
        assert_eq!(c.degrees().iter().filter(|&&d| d == 4).count(), 1);

        let s = g(FamilySpec::Fig6Spider);
        assert_eq!(s.n(), 15);
        assert!(s.is_tree());
        assert_eq!([1, 4, 7].map(|v| s.degree(v)), [4, 4, 4]);
    }

    #[test]
    fn invalid_parameters() {
        for spec in [
            FamilySpec::Path(0),
            FamilySpec::Cycle(2),
            FamilySpec::Comb(3),
            FamilySpec::Grs(0, 2),
            FamilySpec::Hk(vec![1, 1]),
            FamilySpec::Hk(vec![1, 0, 1]),
            FamilySpec::CocktailParty(0),
        ] {
            assert!(matches!(generate(&spec), Err(Error::InvalidFamily(_))), "{spec:?}");
        }
    }

    #[test]
    fn parse_tokens() {
        assert_eq!(FamilySpec::parse(&["hk", "4", "3", "2", "3", "2"]).unwrap(), FamilySpec::Hk(vec![3, 2, 3, 2]));
        assert_eq!(FamilySpec::parse(&["grs", "4", "4"]).unwrap(), FamilySpec::Grs(4, 4));
        assert_eq!(FamilySpec::parse(&["fig6_spider"]).unwrap(), FamilySpec::Fig6Spider);
        assert!(FamilySpec::parse(&["path"]).is_err());
        assert!(FamilySpec::parse(&["hk", "3", "1"]).is_err());
        assert!(FamilySpec::parse(&["petersen"]).is_err());
    }

    #[test]
    fn random_connected_cases() {
        assert_eq!(random_connected(1, 0.5, 3).unwrap(), Graph::empty(1));
        for seed in 0..5 {
            assert!(random_connected(5, 1.0, seed).unwrap().is_complete());
        }
        let a = random_connected(8, 0.3, 7).unwrap();
        assert!(a.is_connected());
        assert_eq!(a, random_connected(8, 0.3, 7).unwrap());
        assert!(random_connected(0, 0.5, 1).is_err());
        assert!(random_connected(4, 0.0, 1).is_err());
    }
}
