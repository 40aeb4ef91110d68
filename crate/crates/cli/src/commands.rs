use devres::combinatorics::{
    combinatorial_coefficients, combinatorial_coefficients_ij, d_function, parshin_symbol,
    CombCoeffTable,
};
use devres::lattice::{
    is_completely_developed, is_developed, is_i_developed, minkowski_sum_all, mixed_volume,
    DevelopednessCertificate,
};
use devres::oracle::{
    agrees, bivariate_roots, numeric_product, numeric_sum, univariate_roots, COMPARE_TOLERANCE,
};
use devres::residues::RootSums;
use devres::resultants::{
    delta_resultant_1d, delta_resultant_1developed, developed_pivots, pi_product,
    signed_poisson_check, sylvester_matrix, sylvester_resultant, Segment,
};
use devres::{Error, ExponentVector, LaurentPoly, Rational, SystemInstance};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::schema::{covector, point, polytope, rat, PolyDoc};
use crate::{exit, Command, Outcome};

type Step<T> = std::result::Result<T, Outcome>;

/// Maps a library error to an exit status and an error document, with
/// indices shifted to 1-based.
fn failure(e: Error) -> Outcome {
    use exit::*;
    let (status, kind, message, details) = match &e {
        Error::NotDeveloped { witness } => (
            PRECONDITION,
            "not_developed",
            e.to_string(),
            json!({ "witness": covector(witness) }),
        ),
        Error::NotIDeveloped { index, witness } => (
            PRECONDITION,
            "not_i_developed",
            format!(
                "collection is not {}-developed; witness covector {witness}",
                index + 1
            ),
            json!({ "index": index + 1, "witness": covector(witness) }),
        ),
        Error::DegenerateVertexCoefficient { index, vertex } => (
            PRECONDITION,
            "degenerate_vertex_coefficient",
            format!(
                "polynomial {} has a zero coefficient at vertex {:?} of its declared polytope",
                index + 1,
                vertex.coords()
            ),
            json!({ "polynomial": index + 1, "vertex": point(vertex) }),
        ),
        Error::AmbiguousEssentialFacet { normal } => (
            PRECONDITION,
            "ambiguous_essential_facet",
            e.to_string(),
            json!({ "normal": covector(normal) }),
        ),
        Error::NotAVertex { point: p } => (
            PRECONDITION,
            "not_a_vertex",
            e.to_string(),
            json!({ "point": point(p) }),
        ),
        Error::WrongCount { expected, found } => (
            PRECONDITION,
            "wrong_count",
            e.to_string(),
            json!({ "expected": expected, "found": found }),
        ),
        Error::NotEnoughPowerSums { .. } => (
            PRECONDITION,
            "not_enough_power_sums",
            e.to_string(),
            Value::Null,
        ),
        Error::PositiveDimensional => (
            PRECONDITION,
            "positive_dimensional",
            e.to_string(),
            Value::Null,
        ),
        Error::BothZero => (PRECONDITION, "both_zero", e.to_string(), Value::Null),
        Error::ZeroPolynomial => (PRECONDITION, "zero_polynomial", e.to_string(), Value::Null),
        Error::ZeroCoefficient { index } => (
            PRECONDITION,
            "zero_coefficient",
            format!("zero coefficient in Parshin symbol entry {}", index + 1),
            json!({ "entry": index + 1 }),
        ),
        Error::RankMismatch { .. } => (PRECONDITION, "rank_mismatch", e.to_string(), Value::Null),
        Error::EmptySupport => (PRECONDITION, "empty_support", e.to_string(), Value::Null),
        Error::SameIndex { index } => (
            SCHEMA,
            "same_index",
            format!("indices must differ, both are {}", index + 1),
            Value::Null,
        ),
        Error::IndexOutOfRange { index, len } => (
            SCHEMA,
            "index_out_of_range",
            format!("index {} out of range 1..={len}", index + 1),
            Value::Null,
        ),
        Error::DimensionMismatch { .. } => {
            (SCHEMA, "dimension_mismatch", e.to_string(), Value::Null)
        }
        Error::OutsideDeclaredPolytope { index } => (
            SCHEMA,
            "outside_declared_polytope",
            format!(
                "polynomial {} has terms outside its declared polytope",
                index + 1
            ),
            Value::Null,
        ),
        Error::Internal(_) => (INTERNAL, "internal", e.to_string(), Value::Null),
    };
    Outcome::error(status, kind, message, details)
}

trait OrFail<T> {
    fn or_fail(self) -> Step<T>;
}

impl<T> OrFail<T> for devres::Result<T> {
    fn or_fail(self) -> Step<T> {
        self.map_err(failure)
    }
}

fn require_count(system: &SystemInstance, extra: usize) -> Step<()> {
    let expected = system.n() + extra;
    if system.len() != expected {
        return Err(failure(Error::WrongCount {
            expected,
            found: system.len(),
        }));
    }
    Ok(())
}

/// A 1-based index from the command line, as 0-based.
fn index_arg(k: usize, len: usize) -> Step<usize> {
    if k == 0 || k > len {
        return Err(Outcome::schema(format!("index {k} out of range 1..={len}")));
    }
    Ok(k - 1)
}

pub fn execute(command: &Command, system: &SystemInstance) -> Outcome {
    let result = match command {
        Command::Polytope => polytopes(system),
        Command::Minkowski => minkowski(system),
        Command::MixedVolume => mixed(system),
        Command::Developed { i, complete } => developed(system, *i, *complete),
        Command::CombCoeffs { pair } => comb_coeffs(system, pair.as_deref()),
        Command::PowerSums { f, k } => power_sums(system, f, *k),
        Command::CharPoly { f } => char_poly(system, f),
        Command::Product { i } => product(system, *i),
        Command::Parshin => parshin(system),
        Command::DFunction => d_value(system),
        Command::Sylvester => sylvester(system),
        Command::Resultant { pivot } => resultant(system, *pivot),
        Command::PoissonCheck => poisson_check(system),
        Command::Verify => verify(system),
    };
    result.unwrap_or_else(|e| e)
}

fn polytopes(system: &SystemInstance) -> Step<Outcome> {
    Ok(Outcome::ok(json!({
        "polytopes": system.declared().iter().map(polytope).collect::<Vec<_>>(),
    })))
}

fn minkowski(system: &SystemInstance) -> Step<Outcome> {
    let sum = minkowski_sum_all(system.declared()).or_fail()?;
    Ok(Outcome::ok(json!({ "sum": polytope(&sum) })))
}

fn mixed(system: &SystemInstance) -> Step<Outcome> {
    require_count(system, 0)?;
    let v = mixed_volume(system.declared(), system.n()).or_fail()?;
    Ok(Outcome::ok(json!({ "value": v.to_string() })))
}

fn certificate_doc(cert: &DevelopednessCertificate, skipped: Option<usize>) -> Value {
    // Summand indices in the certificate refer to the tuple with `skipped` removed.
    let original = |k: usize| match skipped {
        Some(s) if k >= s => k + 2,
        _ => k + 1,
    };
    json!({
        "developed": cert.verdict,
        "faces": cert.witnesses.iter().map(|(v, k)| json!({
            "covector": covector(v),
            "vertex_term": original(*k),
        })).collect::<Vec<_>>(),
    })
}

fn developed(system: &SystemInstance, i: Option<usize>, complete: bool) -> Step<Outcome> {
    let ds = system.declared();
    if complete {
        require_count(system, 1)?;
        let cert = is_completely_developed(ds).or_fail()?;
        let failures: Vec<Value> = cert
            .certificates
            .iter()
            .enumerate()
            .filter_map(|(k, c)| {
                c.counterexample
                    .as_ref()
                    .map(|w| json!({ "index": k + 1, "witness": covector(w) }))
            })
            .collect();
        if !cert.verdict {
            return Ok(Outcome::error(
                exit::PRECONDITION,
                "not_completely_developed",
                format!(
                    "collection is not i-developed for {} of {} indices",
                    failures.len(),
                    ds.len()
                ),
                json!({ "failures": failures }),
            ));
        }
        return Ok(Outcome::ok(
            json!({ "completely_developed": true, "indices": ds.len() }),
        ));
    }
    let (cert, skipped) = match i {
        Some(k) => {
            require_count(system, 1)?;
            let k = index_arg(k, ds.len())?;
            (is_i_developed(ds, k).or_fail()?, Some(k))
        }
        None => {
            require_count(system, 0)?;
            (is_developed(ds).or_fail()?, None)
        }
    };
    match (&cert.counterexample, skipped) {
        (Some(w), Some(k)) => Err(failure(Error::NotIDeveloped {
            index: k,
            witness: w.clone(),
        })),
        (Some(w), None) => Err(failure(Error::NotDeveloped { witness: w.clone() })),
        (None, _) => Ok(Outcome::ok(certificate_doc(&cert, skipped))),
    }
}

fn table_doc(table: &CombCoeffTable) -> Value {
    json!({
        "coefficients": table.iter().map(|(a, k)| json!({ "vertex": point(a), "k": k })).collect::<Vec<_>>(),
        "total": table.total(),
    })
}

fn comb_coeffs(system: &SystemInstance, pair: Option<&[usize]>) -> Step<Outcome> {
    let ds = system.declared();
    let table = match pair {
        Some(&[i, j]) => {
            require_count(system, 1)?;
            let (i, j) = (index_arg(i, ds.len())?, index_arg(j, ds.len())?);
            combinatorial_coefficients_ij(ds, i, j).or_fail()?
        }
        Some(_) => return Err(Outcome::schema("--pair takes two indices")),
        None => {
            require_count(system, 0)?;
            combinatorial_coefficients(ds).or_fail()?
        }
    };
    Ok(Outcome::ok(table_doc(&table)))
}

/// The system and the function named by `--f`: an index into the document
/// (excluded from the system when the document has `n + 1` entries) or an
/// inline polynomial document.
fn select_function(system: &SystemInstance, spec: &str) -> Step<(SystemInstance, LaurentPoly)> {
    let n = system.n();
    if let Ok(k) = spec.trim().parse::<usize>() {
        let k = index_arg(k, system.len())?;
        let f = system.polys()[k].clone();
        if system.len() == n + 1 {
            return Ok((system.without(k), f));
        }
        require_count(system, 0)?;
        return Ok((system.clone(), f));
    }
    let doc: PolyDoc = serde_json::from_str(spec)
        .map_err(|e| Outcome::schema(format!("--f is neither an index nor a polynomial: {e}")))?;
    let f = doc.to_poly(n, "--f").map_err(|e| Outcome::schema(e.0))?;
    require_count(system, 0)?;
    Ok((system.clone(), f))
}

fn power_sums(system: &SystemInstance, f: &str, k: usize) -> Step<Outcome> {
    let (sys, f) = select_function(system, f)?;
    let mut rs = RootSums::new(&sys).or_fail()?;
    let sums = rs.power_sums(&f, k).or_fail()?;
    Ok(Outcome::ok(json!({
        "root_count": rs.root_count(),
        "power_sums": sums.values().iter().map(rat).collect::<Vec<_>>(),
    })))
}

fn char_poly(system: &SystemInstance, f: &str) -> Step<Outcome> {
    let (sys, f) = select_function(system, f)?;
    let mut rs = RootSums::new(&sys).or_fail()?;
    let chi = rs.characteristic_polynomial(&f).or_fail()?;
    let coefficients: Vec<Value> = (0..=rs.root_count() as i64)
        .map(|d| rat(&chi.coefficient(&ExponentVector::new(vec![d]))))
        .collect();
    Ok(Outcome::ok(
        json!({ "degree": rs.root_count(), "coefficients": coefficients }),
    ))
}

fn product(system: &SystemInstance, i: usize) -> Step<Outcome> {
    require_count(system, 1)?;
    let k = index_arg(i, system.len())?;
    let value = pi_product(system, k).or_fail()?;
    Ok(Outcome::ok(json!({ "i": i, "value": rat(&value) })))
}

fn monomials(system: &SystemInstance) -> Step<Vec<(Rational, ExponentVector)>> {
    require_count(system, 1)?;
    system
        .polys()
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let mut terms = f.terms();
            match (terms.next(), terms.next()) {
                (Some((e, c)), None) => Ok((c.clone(), e.clone())),
                _ => Err(Outcome::schema(format!(
                    "polynomial {} is not a single monomial",
                    k + 1
                ))),
            }
        })
        .collect()
}

fn parshin(system: &SystemInstance) -> Step<Outcome> {
    let entries = monomials(system)?;
    let value = parshin_symbol(&entries).or_fail()?;
    Ok(Outcome::ok(json!({ "value": rat(&value) })))
}

fn d_value(system: &SystemInstance) -> Step<Outcome> {
    let exps: Vec<ExponentVector> = monomials(system)?.into_iter().map(|(_, e)| e).collect();
    let value = d_function(&exps).or_fail()?;
    Ok(Outcome::ok(json!({ "value": value })))
}

fn segment_coefficients(f: &LaurentPoly, s: Segment) -> Vec<Rational> {
    (s.lo..=s.hi)
        .map(|e| f.coefficient(&ExponentVector::new(vec![e])))
        .collect()
}

fn sylvester(system: &SystemInstance) -> Step<Outcome> {
    if system.n() != 1 {
        return Err(Outcome::error(
            exit::PRECONDITION,
            "wrong_dimension",
            "sylvester needs one variable",
            Value::Null,
        ));
    }
    require_count(system, 1)?;
    let segs: Vec<Segment> = system
        .declared()
        .iter()
        .map(Segment::of)
        .collect::<devres::Result<_>>()
        .or_fail()?;
    let (f1, f2) = (&system.polys()[0], &system.polys()[1]);
    let (p1, p2) = (
        segment_coefficients(f1, segs[0]),
        segment_coefficients(f2, segs[1]),
    );
    let matrix = sylvester_matrix(&p1, &p2).or_fail()?;
    let (r1, r2) = sylvester_resultant(&p1, &p2).or_fail()?;
    let (d1, d2) = delta_resultant_1d(f1, f2, segs[0], segs[1]).or_fail()?;
    Ok(Outcome::ok(json!({
        "matrix": matrix.iter().map(|row| row.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "r1": rat(&r1),
        "r2": rat(&r2),
        "delta_r1": rat(&d1),
        "delta_r2": rat(&d2),
    })))
}

fn resultant(system: &SystemInstance, pivot: Option<usize>) -> Step<Outcome> {
    require_count(system, 1)?;
    let pivot = match pivot {
        Some(k) => index_arg(k, system.len())?,
        None => match developed_pivots(system.declared()).or_fail()?.first() {
            Some(&k) => k,
            None => {
                return Ok(Outcome::error(
                    exit::PRECONDITION,
                    "no_developed_pivot",
                    "the collection is not i-developed for any i",
                    Value::Null,
                ))
            }
        },
    };
    let (value, dec) = delta_resultant_1developed(system, pivot).or_fail()?;
    let factors: Vec<Value> = dec
        .facet_factors
        .iter()
        .map(|(f, a)| {
            json!({
                "normal": covector(&f.normal),
                "polynomial": f.poly + 1,
                "vertex": point(&f.vertex),
                "exponent": f.exponent,
                "coefficient": rat(a),
            })
        })
        .collect();
    Ok(Outcome::ok(json!({
        "magnitude": rat(&value.magnitude),
        "sign": "up_to_sign",
        "provenance": "poisson",
        "pivot": pivot + 1,
        "pi_term": rat(&dec.pi_term),
        "facet_factors": factors,
    })))
}

fn poisson_check(system: &SystemInstance) -> Step<Outcome> {
    let report = signed_poisson_check(system).or_fail()?;
    let doc = json!({
        "pi_products": report.pi_products.iter().map(rat).collect::<Vec<_>>(),
        "monomials": report.monomials.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "signs": report.signs,
        "quantities": report.quantities.iter().map(rat).collect::<Vec<_>>(),
        "facet_formula_agrees": report.facet_formula_agrees,
        "consistent": report.consistent,
        "resultant": {
            "value": report.resultant.value().as_ref().map(rat),
            "sign": "exact",
            "provenance": report.resultant.provenance.to_string(),
        },
    });
    let status = if report.consistent && report.facet_formula_agrees {
        exit::OK
    } else {
        exit::VERIFY_MISMATCH
    };
    Ok(Outcome {
        status,
        document: doc,
    })
}

fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

struct Checks(Vec<Value>, bool);

impl Checks {
    fn push(&mut self, quantity: String, exact: &Rational, numeric: Complex64) {
        let ok = agrees(exact, numeric, COMPARE_TOLERANCE);
        self.1 &= ok;
        self.0.push(json!({
            "quantity": quantity,
            "exact": rat(exact),
            "numeric": complex(numeric),
            "agrees": ok,
        }));
    }
}

fn oracle_roots(polys: &[LaurentPoly]) -> devres::Result<devres::oracle::NumericRootSet> {
    match polys {
        [f] => univariate_roots(f),
        [f, g] => bivariate_roots(f, g),
        _ => Err(Error::WrongCount {
            expected: polys.first().map_or(1, LaurentPoly::nvars),
            found: polys.len(),
        }),
    }
}

fn verify(system: &SystemInstance) -> Step<Outcome> {
    let n = system.n();
    if n > 2 {
        return Ok(Outcome::error(
            exit::PRECONDITION,
            "unsupported_dimension",
            "verify supports n = 1 and n = 2",
            Value::Null,
        ));
    }
    let mut checks = Checks(Vec::new(), true);
    let mut residual = 0.0f64;
    if system.len() == n {
        let roots = oracle_roots(system.polys()).or_fail()?;
        residual = roots.residual;
        let mut rs = RootSums::new(system).or_fail()?;
        checks.push(
            "root count".into(),
            &Rational::from_integer(rs.root_count().into()),
            Complex64::new(roots.count() as f64, 0.0),
        );
        for j in 0..n {
            let z = LaurentPoly::variable(n, j);
            let sums = rs.power_sums(&z, 3).or_fail()?;
            for (k, s) in sums.values().iter().enumerate() {
                checks.push(
                    format!("p_{} of z_{}", k + 1, j + 1),
                    s,
                    numeric_sum(&z.pow(k as u32 + 1), &roots),
                );
            }
            let prod = rs.product(&z).or_fail()?;
            checks.push(
                format!("product of z_{}", j + 1),
                &prod,
                numeric_product(&z, &roots),
            );
        }
    } else {
        require_count(system, 1)?;
        for i in developed_pivots(system.declared()).or_fail()? {
            if !system.in_omega(i) {
                continue;
            }
            let rest = system.without(i);
            let roots = oracle_roots(rest.polys()).or_fail()?;
            residual = residual.max(roots.residual);
            let exact = pi_product(system, i).or_fail()?;
            checks.push(
                format!("pi product {}", i + 1),
                &exact,
                numeric_product(&system.polys()[i], &roots),
            );
        }
    }
    let Checks(list, ok) = checks;
    let status = if ok { exit::OK } else { exit::VERIFY_MISMATCH };
    Ok(Outcome {
        status,
        document: json!({ "agrees": ok, "checks": list, "residual": residual }),
    })
}
