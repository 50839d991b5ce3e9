//! Named families with canonical parameters, as used by the command line.

use super::basic;
use super::blueprint::{Built, ProofTrace};
use super::classes::*;
use super::families;
use super::products;
use crate::error::{Error, Result};
use crate::multipole::Multipole;
use serde::Serialize;

macro_rules! families {
    ($($v:ident = $s:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
        pub enum Family { $($v),* }

        impl Family {
            pub const ALL: &'static [Family] = &[$(Family::$v),*];

            pub fn name(self) -> &'static str {
                match self { $(Family::$v => $s),* }
            }
        }
    };
}

families! {
    Petersen = "PETERSEN",
    Dumbbell = "DUMBBELL",
    FlowerJ = "FLOWER_J",
    YPole = "Y_POLE",
    YK = "Y_K",
    Dot = "DOT",
    Blanusa = "BLANUSA",
    Loupekine = "LOUPEKINE",
    Order24 = "ORDER24",
    DoubleStar = "DOUBLE_STAR",
    Dyad = "DYAD",
    Triad = "TRIAD",
    Quasitriad = "QUASITRIAD",
    Dp = "DP",
    Tp = "TP",
    Tricell = "TRICELL",
    Pentagon = "PENTAGON",
    M8 = "M8",
    M11 = "M11",
    MEv = "M_EV",
    M7 = "M7",
    P2 = "P2",
    V4 = "V4",
    Hexagon = "HEXAGON",
    HM = "H_M",
    Nn = "NN",
    Tt = "TT",
    Nt = "NT",
    Ttt = "TTT",
    ThreeNt = "THREE_NT",
    SuperpentagonQ = "SUPERPENTAGON_Q",
    Nnn = "NNN",
    Class32A = "CLASS_32A",
    Class34A = "CLASS_34A",
    Class34B = "CLASS_34B",
    Class34C = "CLASS_34C",
    Class34D = "CLASS_34D",
    Class34E = "CLASS_34E",
    Class34F = "CLASS_34F",
    Class36A = "CLASS_36A",
    Class36B = "CLASS_36B",
    Class36BGen = "CLASS_36B_GEN",
    Class38A = "CLASS_38A",
    Class42A = "CLASS_42A",
    StrictTtt = "STRICT_TTT",
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        let u = s.trim().to_ascii_uppercase().replace('-', "_");
        Family::ALL.iter().copied().find(|f| f.name() == u)
    }

    /// Default integer parameter, for the families that take one.
    pub fn default_param(self) -> Option<usize> {
        match self {
            Family::FlowerJ => Some(5),
            Family::YK => Some(3),
            Family::Blanusa | Family::Loupekine | Family::Order24 => Some(1),
            Family::Class36BGen => Some(2),
            _ => None,
        }
    }

    /// Names of the canonical components.
    pub fn default_parts(self, param: Option<usize>) -> Vec<&'static str> {
        match self {
            Family::Dot => vec!["petersen", "petersen"],
            Family::HM | Family::Class34F => vec!["hexagon"; 5],
            Family::Nn | Family::Nnn | Family::Class32A | Family::Class36A => vec!["dyad"; if self == Family::Nn { 2 } else { 3 }],
            Family::Tt => vec!["triad"; 2],
            Family::Nt => vec!["dyad", "triad"],
            Family::Ttt | Family::StrictTtt => vec!["triad"; 3],
            Family::ThreeNt => vec!["dyad", "dyad", "dyad", "triad"],
            Family::SuperpentagonQ => vec!["triad", "m8"],
            Family::Class34A | Family::Class34B => vec!["dyad", "dyad", "triad", "triad"],
            Family::Class34C => vec!["dp", "dyad", "triad", "triad"],
            Family::Class34D | Family::Class34E => vec!["dyad"; 4],
            Family::Class36B => vec!["dyad"; 5],
            Family::Class36BGen => vec!["dyad"; 4 * param.unwrap_or(2) + 1],
            Family::Class38A => vec!["dyad", "dyad", "dyad", "dyad", "triad"],
            Family::Class42A => vec!["tp", "dyad", "dyad", "triad", "triad"],
            _ => vec![],
        }
    }

    /// Families whose members are snarks.
    pub fn is_snark_family(self) -> bool {
        use Family::*;
        matches!(
            self,
            Petersen
                | Dumbbell
                | Dot
                | Blanusa
                | Loupekine
                | Order24
                | DoubleStar
                | Nnn
                | Class32A
                | Class34A
                | Class34B
                | Class34C
                | Class34D
                | Class34E
                | Class34F
                | Class36A
                | Class36B
                | Class36BGen
                | Class38A
                | Class42A
                | StrictTtt
        )
    }

    /// Families assembled from a blueprint, whose uncolourability argument
    /// can be replayed.
    pub fn has_argument(self) -> bool {
        use Family::*;
        matches!(
            self,
            Nnn | Class32A
                | Class34A
                | Class34B
                | Class34C
                | Class34D
                | Class34E
                | Class34F
                | Class36A
                | Class36B
                | Class36BGen
                | Class38A
                | Class42A
                | StrictTtt
        )
    }

    /// The junction choices of the canonical instance.
    pub fn canonical_alignment(self) -> Alignment {
        let none = Closure::default();
        match self {
            Family::Class34A => Alignment::new(0, &[], Closure::new(&[[0, 1, 2]], &[[3, 5], [4, 6], [7, 8]])),
            Family::Class34B | Family::Class34C => {
                Alignment::new(0, &[], Closure::new(&[[0, 2, 3]], &[[1, 6], [4, 7], [5, 8]]))
            }
            Family::Class34D => {
                Alignment::new(0, &[], Closure::new(&[], &[[0, 2], [1, 3], [4, 8], [5, 11], [6, 9], [7, 12], [10, 13]]))
            }
            Family::Class34E => {
                Alignment::new(0, &[], Closure::new(&[], &[[0, 8], [1, 11], [2, 9], [3, 12], [4, 6], [5, 7], [10, 13]]))
            }
            Family::Class36A => Alignment::new(0, &[4], none),
            Family::Class38A => Alignment::new(0, &[0], none),
            Family::Class42A => Alignment::new(0, &[], Closure::new(&[], &[[0, 4], [1, 7], [2, 3], [5, 8], [6, 9]])),
            Family::StrictTtt => Alignment::new(0, &[0, 0, 0], none),
            _ => Alignment::default(),
        }
    }
}

/// A catalog multipole by name: `dyad`, `triad`, `dp`, `j7`, `neg_j5`, ...
/// `neg_<graph>` is the negator at the first two neighbours of vertex 0.
pub fn component(name: &str) -> Result<Multipole> {
    let n = name.trim().to_ascii_lowercase();
    if let Some(g) = n.strip_prefix("neg_") {
        let host = component(g)?;
        let nb = host.adjacency().first().cloned().unwrap_or_default();
        if nb.len() < 2 {
            return Err(Error::Precondition(format!("`{g}` has no 2-path at vertex 0")));
        }
        return basic::negator_of(&host, nb[0], nb[1]);
    }
    if let Some(k) = n.strip_prefix('j').and_then(|k| k.parse().ok()) {
        return basic::flower(k);
    }
    Ok(match n.as_str() {
        "petersen" | "pg" => basic::petersen(),
        "dumbbell" => basic::dumbbell(),
        "k4" => basic::k4(),
        "k33" => basic::k33(),
        "dyad" | "d" => basic::dyad(),
        "triad" | "t" => basic::triad(),
        "quasitriad" | "qt" => basic::quasitriad(),
        "dp" => basic::double_pentagon(),
        "tp" => basic::triple_pentagon(),
        "tricell" | "tc" => basic::tricell(),
        "pentagon" | "c5" => basic::pentagon(),
        "pentagram" => basic::pentagram(),
        "m8" => basic::m8(),
        "m11" => default_m11()?,
        "m_ev" | "mev" => basic::m_ev(),
        "m7" => basic::m7(),
        "p2" => basic::p2(),
        "v4" => basic::v4(),
        "hexagon" => basic::hexagon(),
        "y_pole" | "y" => basic::y_pole(),
        _ => return Err(Error::Precondition(format!("unknown component `{name}`"))),
    })
}

fn default_m11() -> Result<Multipole> {
    let (x, f, g, r, rot) = M11_DEFAULT;
    m11(x, f, g, r, rot)
}

/// A family together with its parameter, components and junction choices.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub param: Option<usize>,
    pub parts: Vec<Multipole>,
    /// Integer selectors: `DOT` takes `e f u v`, `H_M` and `CLASS_34F` take
    /// six flip bits.
    pub selectors: Vec<usize>,
    pub alignment: Alignment,
}

impl FamilySpec {
    /// The canonical instance.
    pub fn canonical(family: Family) -> Result<Self> {
        Self::with(family, family.default_param(), None)
    }

    pub fn with(family: Family, param: Option<usize>, parts: Option<&[&str]>) -> Result<Self> {
        let param = param.or(family.default_param());
        let names: Vec<&str> = match parts {
            Some(p) => p.to_vec(),
            None => family.default_parts(param),
        };
        let parts = names.iter().map(|n| component(n)).collect::<Result<Vec<_>>>()?;
        let selectors = match family {
            Family::Dot => {
                let (e, f, u, v, _) = products::BLANUSA_SELECTORS[0];
                vec![e, f, u, v]
            }
            _ => vec![],
        };
        Ok(FamilySpec { family, param, parts, selectors, alignment: family.canonical_alignment() })
    }

    /// Parse `NAME` or `NAME(n)` plus an optional comma-separated part list.
    pub fn parse(text: &str, parts: Option<&str>) -> Result<Self> {
        let text = text.trim();
        let (name, param) = match text.split_once('(') {
            Some((n, rest)) => {
                let v = rest
                    .strip_suffix(')')
                    .and_then(|v| v.trim().parse().ok())
                    .ok_or_else(|| Error::Precondition(format!("bad parameter in `{text}`")))?;
                (n, Some(v))
            }
            None => (text, None),
        };
        let family = Family::parse(name).ok_or_else(|| Error::Precondition(format!("unknown family `{name}`")))?;
        let list: Option<Vec<&str>> = parts.map(|p| p.split(',').map(str::trim).filter(|s| !s.is_empty()).collect());
        Self::with(family, param, list.as_deref())
    }

    fn parts_exact<const K: usize>(&self) -> Result<[&Multipole; K]> {
        if self.parts.len() != K {
            return Err(Error::Precondition(format!(
                "{} needs {K} components, got {}",
                self.family.name(),
                self.parts.len()
            )));
        }
        Ok(std::array::from_fn(|i| &self.parts[i]))
    }

    fn flips6(&self) -> [bool; 6] {
        std::array::from_fn(|i| self.selectors.get(i).is_some_and(|&b| b != 0))
    }
}

/// Build the multipole a spec describes.
pub fn build(spec: &FamilySpec) -> Result<Multipole> {
    if let Some(b) = build_blueprint(spec)? {
        return Ok(b.multipole);
    }
    let p = spec.param;
    use Family::*;
    match spec.family {
        Petersen => Ok(basic::petersen()),
        Dumbbell => Ok(basic::dumbbell()),
        FlowerJ => basic::flower(p.unwrap_or(5)),
        YPole => Ok(basic::y_pole()),
        YK => basic::y_chain(p.unwrap_or(3)),
        Dot => {
            let [g, h] = spec.parts_exact()?;
            let [e, f, u, v] = spec.selectors[..] else {
                return Err(Error::Precondition("DOT needs selectors e f u v".into()));
            };
            products::dot_product(g, e, f, h, u, v)
        }
        Blanusa => match p {
            Some(1) => Ok(products::blanusa(products::Blanusa::Type1)?.graph),
            Some(2) => Ok(products::blanusa(products::Blanusa::Type2)?.graph),
            _ => Err(Error::Precondition("BLANUSA takes 1 or 2".into())),
        },
        Loupekine => products::loupekine(p.unwrap_or(1)),
        Order24 => products::order24_snark(p.unwrap_or(1).wrapping_sub(1)),
        DoubleStar => products::double_star(),
        Dyad => Ok(basic::dyad()),
        Triad => Ok(basic::triad()),
        Quasitriad => Ok(basic::quasitriad()),
        Dp => Ok(basic::double_pentagon()),
        Tp => Ok(basic::triple_pentagon()),
        Tricell => Ok(basic::tricell()),
        Pentagon => Ok(basic::pentagon()),
        M8 => Ok(basic::m8()),
        M11 => default_m11(),
        MEv => Ok(basic::m_ev()),
        M7 => Ok(basic::m7()),
        P2 => Ok(basic::p2()),
        V4 => Ok(basic::v4()),
        Hexagon => Ok(basic::hexagon()),
        HM => {
            let ps: [&Multipole; 5] = spec.parts_exact()?;
            families::h_m(&ps.map(Clone::clone), spec.flips6())
        }
        Nn => {
            let [a, b] = spec.parts_exact()?;
            families::nn(a, b)
        }
        Tt => {
            let [a, b] = spec.parts_exact()?;
            families::tt(a, b)
        }
        Nt => {
            let [a, b] = spec.parts_exact()?;
            families::nt(a, b)
        }
        Ttt => {
            let [a, b, c] = spec.parts_exact()?;
            families::ttt(a, b, c)
        }
        ThreeNt => {
            let [a, b, c, t] = spec.parts_exact()?;
            families::three_nt(a, b, c, t)
        }
        SuperpentagonQ => {
            let [t, r] = spec.parts_exact()?;
            families::superpentagon_q(t, r)
        }
        _ => Err(Error::Precondition(format!("{} has no builder", spec.family.name()))),
    }
}

/// Build the blueprint of a family with a replayable argument, or `None`.
pub fn build_blueprint(spec: &FamilySpec) -> Result<Option<Built>> {
    let al = &spec.alignment;
    use Family::*;
    let b = match spec.family {
        Nnn => families::nnn_built(spec.parts_exact()?, [None, None, None])?,
        Class32A => {
            let ns = spec.parts_exact::<3>()?;
            class_32a(ns, &default_m11()?, al)?
        }
        Class34A => {
            let [a, b, c, d] = spec.parts_exact()?;
            class_34a([a, b], [c, d], al)?
        }
        Class34B => {
            let [a, b, c, d] = spec.parts_exact()?;
            class_34b([a, b], [c, d], al)?
        }
        Class34C => {
            let [rr, n, c, d] = spec.parts_exact()?;
            class_34c(rr, n, [c, d], al)?
        }
        Class34D | Class34E => negator_ring(spec.parts_exact()?, al)?,
        Class34F => {
            let ps: [&Multipole; 5] = spec.parts_exact()?;
            class_34f(&ps.map(Clone::clone), spec.flips6())?
        }
        Class36A => class_36a(spec.parts_exact()?, al)?,
        Class36B => class_36b(&spec.parts_exact::<5>()?, al)?,
        Class36BGen => {
            let k = spec.param.unwrap_or(2);
            if spec.parts.len() != 4 * k + 1 {
                return Err(Error::Precondition(format!("CLASS_36B_GEN({k}) needs {} negators", 4 * k + 1)));
            }
            let ns: Vec<&Multipole> = spec.parts.iter().collect();
            class_36b(&ns, al)?
        }
        Class38A => {
            let [a, b, c, d, t] = spec.parts_exact()?;
            class_38a([a, b, c, d], t, al)?
        }
        Class42A => {
            let [rr, a, b, c, d] = spec.parts_exact()?;
            class_42a(rr, [a, b], [c, d], al)?
        }
        StrictTtt => strict_ttt(spec.parts_exact()?, al)?,
        _ => return Ok(None),
    };
    Ok(Some(b))
}

/// Run the colouring oracle and replay the class argument; both must find
/// the graph uncolourable.
pub fn verify_family_uncolourable(spec: &FamilySpec) -> Result<ProofTrace> {
    let b = build_blueprint(spec)?
        .ok_or_else(|| Error::Precondition(format!("{} has no uncolourability argument", spec.family.name())))?;
    let trace = ProofTrace::from_built(spec.family.name(), &b)?;
    if !trace.agrees {
        return Err(Error::Verification(format!(
            "{}: {} colourings, argument {}",
            spec.family.name(),
            trace.oracle_colourings,
            if trace.abstract_satisfiable { "inconclusive" } else { "unsat" }
        )));
    }
    Ok(trace)
}
