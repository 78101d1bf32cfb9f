//! Python bindings for `gtkk_core`.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use gtkk_core::charpoly;
use gtkk_core::crystal::{self, PairSpace, TensorConvention};
use gtkk_core::{gt, kk, kogan, reading, verify};
use gtkk_core::{CharPoly, Error, GtPattern, Partition, Permutation as CorePermutation, TensorElement, Word};

create_exception!(gtkk, SizeGuardError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::SizeGuard { .. } | Error::RankTooLarge { .. } => SizeGuardError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn partition(parts: Vec<i64>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn word(n: usize, letters: Vec<usize>) -> PyResult<Word> {
    Word::new(n, letters).map_err(err)
}

fn terms(c: &CharPoly) -> Vec<(Vec<i64>, i64)> {
    c.terms().iter().map(|(w, &m)| (w.coords().to_vec(), m)).collect()
}

fn pairs(ts: impl IntoIterator<Item = TensorElement>) -> Vec<(Pattern, Pattern)> {
    ts.into_iter()
        .map(|t| (Pattern(t.left), Pattern(t.right)))
        .collect()
}

/// A permutation of `1..=n` in one-line notation; `u * v` applies `v` first.
#[pyclass(name = "Permutation", module = "gtkk", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(CorePermutation);

#[pymethods]
impl Permutation {
    #[new]
    fn new(one_line: Vec<usize>) -> PyResult<Self> {
        CorePermutation::from_one_line(&one_line).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        CorePermutation::identity(n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn longest(n: usize) -> PyResult<Self> {
        CorePermutation::longest(n).map(Self).map_err(err)
    }

    /// `s_{i1} ... s_{ik}` as a permutation.
    #[staticmethod]
    fn from_word(n: usize, letters: Vec<usize>) -> PyResult<Self> {
        Ok(Self(word(n, letters)?.evaluate()))
    }

    #[staticmethod]
    fn all(n: usize) -> PyResult<Vec<Self>> {
        Ok(CorePermutation::all(n).map_err(err)?.into_iter().map(Self).collect())
    }

    #[getter]
    fn one_line(&self) -> Vec<usize> {
        self.0.one_line()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    /// The Demazure product `self * other`.
    fn star(&self, other: &Self) -> PyResult<Self> {
        self.0.star_product(&other.0).map(Self).map_err(err)
    }

    fn bruhat_leq(&self, other: &Self) -> PyResult<bool> {
        self.0.bruhat_leq(&other.0).map_err(err)
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.0.reduced_word().letters().to_vec()
    }

    fn times_longest(&self) -> Self {
        Self(self.0.times_longest())
    }

    fn longest_times(&self) -> Self {
        Self(self.0.longest_times())
    }

    fn __len__(&self) -> usize {
        self.0.rank()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.one_line())
    }
}

/// An integral Gelfand-Tsetlin pattern, top row first.
#[pyclass(name = "Pattern", module = "gtkk", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(GtPattern);

#[pymethods]
impl Pattern {
    /// Rows of lengths 1, 2, ..., n; need not interlace.
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        GtPattern::from_rows(rows).map(Self).map_err(err)
    }

    #[staticmethod]
    fn highest(shape: Vec<i64>) -> PyResult<Self> {
        Ok(Self(GtPattern::highest(&partition(shape)?)))
    }

    #[staticmethod]
    fn lowest(shape: Vec<i64>) -> PyResult<Self> {
        Ok(Self(GtPattern::lowest(&partition(shape)?)))
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<i64>> {
        self.0.rows()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.size()
    }

    fn shape(&self) -> Vec<i64> {
        self.0.shape().parts().to_vec()
    }

    fn weight(&self) -> Vec<i64> {
        self.0.weight().coords().to_vec()
    }

    fn is_valid(&self) -> bool {
        self.0.is_valid()
    }

    /// `(kind, i, j)` for every failed interlacing inequality.
    fn violations(&self) -> Vec<(&'static str, usize, usize)> {
        self.0.violations().into_iter().map(|(k, i, j)| (k.name(), i, j)).collect()
    }

    fn raise_op(&self, i: usize) -> PyResult<Option<Self>> {
        Ok(crystal::raise(&self.0, i).map_err(err)?.map(Self))
    }

    fn lower_op(&self, i: usize) -> PyResult<Option<Self>> {
        Ok(crystal::lower(&self.0, i).map_err(err)?.map(Self))
    }

    fn epsilon(&self, i: usize) -> PyResult<usize> {
        crystal::epsilon(&self.0, i).map_err(err)
    }

    fn phi(&self, i: usize) -> PyResult<usize> {
        crystal::phi(&self.0, i).map_err(err)
    }

    fn f_word(&self) -> Vec<usize> {
        reading::f_word(&self.0).letters().to_vec()
    }

    fn i_word(&self) -> Vec<usize> {
        reading::i_word(&self.0).letters().to_vec()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("patterns serialize")
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("Pattern({:?})", self.0.rows())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// All patterns of the given shape, sorted.
#[pyfunction]
fn enumerate(shape: Vec<i64>) -> PyResult<Vec<Pattern>> {
    Ok(gt::enumerate(&partition(shape)?).map_err(err)?.into_iter().map(Pattern).collect())
}

#[pyfunction]
fn demazure_product(n: usize, letters: Vec<usize>) -> PyResult<Permutation> {
    Ok(Permutation(word(n, letters)?.demazure_product()))
}

/// Demazure crystal of `shape` for the word `letters`.
#[pyfunction]
fn demazure_crystal(shape: Vec<i64>, letters: Vec<usize>) -> PyResult<Vec<Pattern>> {
    let mu = partition(shape)?;
    let w = word(mu.rank(), letters)?;
    Ok(crystal::demazure_crystal(&mu, &w).map_err(err)?.into_iter().map(Pattern).collect())
}

/// Opposite Demazure crystal of `shape` indexed by `w`.
#[pyfunction]
fn opposite_demazure_crystal(shape: Vec<i64>, w: &Permutation) -> PyResult<Vec<Pattern>> {
    let mu = partition(shape)?;
    Ok(crystal::opposite_demazure_crystal_of(&mu, &w.0)
        .map_err(err)?
        .into_iter()
        .map(Pattern)
        .collect())
}

/// Raises `p ⊗ q` by `e_i`; `None` if the result is zero.
#[pyfunction]
fn tensor_raise(p: &Pattern, q: &Pattern, i: usize) -> PyResult<Option<(Pattern, Pattern)>> {
    let t = TensorElement::new(p.0.clone(), q.0.clone());
    Ok(crystal::tensor_raise(&t, i).map_err(err)?.map(|t| (Pattern(t.left), Pattern(t.right))))
}

#[pyfunction]
fn tensor_lower(p: &Pattern, q: &Pattern, i: usize) -> PyResult<Option<(Pattern, Pattern)>> {
    let t = TensorElement::new(p.0.clone(), q.0.clone());
    Ok(crystal::tensor_lower(&t, i).map_err(err)?.map(|t| (Pattern(t.left), Pattern(t.right))))
}

/// The permutation `p(P, Q)` attached to a pair.
#[pyfunction]
fn associated_permutation(p: &Pattern, q: &Pattern) -> PyResult<Permutation> {
    reading::associated_permutation(&p.0, &q.0).map(Permutation).map_err(err)
}

/// Reading data of a pair as a JSON object.
#[pyfunction]
fn reading_json(p: &Pattern, q: &Pattern) -> PyResult<String> {
    let r = reading::PairReading::new(&p.0, &q.0).map_err(err)?;
    Ok(serde_json::to_string(&r).expect("reading serializes"))
}

fn space(lambda: Vec<i64>, mu: Vec<i64>, force: bool) -> PyResult<PairSpace> {
    let (l, m) = (partition(lambda)?, partition(mu)?);
    if force {
        PairSpace::new_forced(&l, &m)
    } else {
        PairSpace::new(&l, &m)
    }
    .map_err(err)
}

/// Pairs `(P, Q)` of the Kostant-Kumar crystal for `w`.
#[pyfunction]
#[pyo3(signature = (lambda, mu, w, force = false))]
fn kk_crystal(lambda: Vec<i64>, mu: Vec<i64>, w: &Permutation, force: bool) -> PyResult<Vec<(Pattern, Pattern)>> {
    let k = kk::kk_crystal_in(&space(lambda, mu, force)?, &w.0).map_err(err)?;
    Ok(pairs(k.members))
}

/// Character of the Kostant-Kumar crystal as `(weight, multiplicity)` terms.
#[pyfunction]
#[pyo3(signature = (lambda, mu, w, force = false))]
fn kk_character(lambda: Vec<i64>, mu: Vec<i64>, w: &Permutation, force: bool) -> PyResult<Vec<(Vec<i64>, i64)>> {
    let k = kk::kk_crystal_in(&space(lambda, mu, force)?, &w.0).map_err(err)?;
    Ok(terms(&k.character()))
}

/// Highest weights of the components making up the crystal, with multiplicities.
#[pyfunction]
#[pyo3(signature = (lambda, mu, w, force = false))]
fn kk_decompose(lambda: Vec<i64>, mu: Vec<i64>, w: &Permutation, force: bool) -> PyResult<Vec<(Vec<i64>, usize)>> {
    let d = kk::decompose_in(&space(lambda, mu, force)?, &w.0, TensorConvention::Kashiwara).map_err(err)?;
    Ok(d.into_iter().map(|(h, m)| (h.coords().to_vec(), m)).collect())
}

#[pyfunction]
fn cartan_component(lambda: Vec<i64>, mu: Vec<i64>) -> PyResult<Vec<(Pattern, Pattern)>> {
    let c = kk::cartan_component(&partition(lambda)?, &partition(mu)?).map_err(err)?;
    Ok(pairs(c))
}

/// Points of the reduced Kogan faces with permutation `w`.
#[pyfunction]
#[pyo3(signature = (shape, w, dual = false))]
fn kogan_points(shape: Vec<i64>, w: &Permutation, dual: bool) -> PyResult<Vec<Pattern>> {
    let mu = partition(shape)?;
    let pts = if dual {
        kogan::dual_kogan_points(&mu, &w.0)
    } else {
        kogan::kogan_points(&mu, &w.0)
    }
    .map_err(err)?;
    Ok(pts.into_iter().map(Pattern).collect())
}

/// Union of the reduced BiKogan faces for `v`.
#[pyfunction]
fn bikogan_points(lambda: Vec<i64>, mu: Vec<i64>, v: &Permutation) -> PyResult<Vec<(Pattern, Pattern)>> {
    let pts = kogan::bikogan_union_points(&partition(lambda)?, &partition(mu)?, &v.0).map_err(err)?;
    Ok(pairs(pts))
}

#[pyfunction]
fn schur(shape: Vec<i64>) -> PyResult<Vec<(Vec<i64>, i64)>> {
    Ok(terms(&charpoly::schur(&partition(shape)?).map_err(err)?))
}

#[pyfunction]
fn demazure_character(shape: Vec<i64>, letters: Vec<usize>) -> PyResult<Vec<(Vec<i64>, i64)>> {
    let mu = partition(shape)?;
    let w = word(mu.rank(), letters)?;
    Ok(terms(&charpoly::demazure_character(&mu, &w).map_err(err)?))
}

/// Runs the cross-check suite and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (n, max_weight, mirrored = false))]
fn run_verify(py: Python<'_>, n: usize, max_weight: i64, mirrored: bool) -> PyResult<String> {
    let conv = if mirrored {
        TensorConvention::Mirrored
    } else {
        TensorConvention::Kashiwara
    };
    let report = py
        .detach(|| verify::run_verify_with(n, max_weight, conv))
        .map_err(err)?;
    Ok(report.to_json().to_string())
}

#[pymodule]
fn gtkk(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SizeGuardError", m.py().get_type::<SizeGuardError>())?;
    m.add_class::<Permutation>()?;
    m.add_class::<Pattern>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(demazure_product, m)?)?;
    m.add_function(wrap_pyfunction!(demazure_crystal, m)?)?;
    m.add_function(wrap_pyfunction!(opposite_demazure_crystal, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_raise, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_lower, m)?)?;
    m.add_function(wrap_pyfunction!(associated_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(reading_json, m)?)?;
    m.add_function(wrap_pyfunction!(kk_crystal, m)?)?;
    m.add_function(wrap_pyfunction!(kk_character, m)?)?;
    m.add_function(wrap_pyfunction!(kk_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(cartan_component, m)?)?;
    m.add_function(wrap_pyfunction!(kogan_points, m)?)?;
    m.add_function(wrap_pyfunction!(bikogan_points, m)?)?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(demazure_character, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
