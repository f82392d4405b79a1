//! C ABI over the relspin library.
//!
//! All functions are `#[no_mangle] extern "C"`; a generated header lives at
//! `include/relspin.h`. Ground states are created behind the opaque
//! [`RelspinState`] handle and every call reports a [`RelspinStatus`]. Pass
//! `alpha_el <= 0` to use the built-in CODATA fine-structure constant and
//! order `0` for the default quadrature orders.

use std::os::raw::c_char;

use relspin::dirac::{Axis, PhysicalConstants};
use relspin::expectation::ZPoint;
use relspin::grid::GridConfig;
use relspin::hydrogen::{sommerfeld_energy, Orientation, QuantumNumbers};
use relspin::spin_ops::SpinKind;
use relspin::Error;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelspinStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    Supercritical = 4,
    SingularMomentum = 5,
    NumericalFailure = 6,
}

/// The six spin-operator families, in report order.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelspinSpinKind {
    Pauli = 0,
    FoldyWouthuysen = 1,
    Czachor = 2,
    Frenkel = 3,
    Chakrabarti = 4,
    Pryce = 5,
}

/// Spin projection of the ground-state doublet.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelspinOrientation {
    Up = 0,
    Down = 1,
}

/// One row of the property report: sampled yes/no outcomes with the worst
/// defect norms behind them. Boolean fields use 1 for yes.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct RelspinTableRow {
    pub kind: RelspinSpinKind,
    pub commutes_with_h0: u8,
    pub algebra_holds: u8,
    pub eigenvalues_half: u8,
    pub covariance_holds: u8,
    pub matches_reference: u8,
    pub h0_defect: f64,
    pub algebra_defect: f64,
    pub eigenvalue_deviation: f64,
    pub covariance_defect: f64,
}

/// Opaque handle to one hydrogenic ground state on its momentum grid.
pub struct RelspinState {
    point: ZPoint,
    orientation: Orientation,
}

fn status_of(err: &Error) -> RelspinStatus {
    match err {
        Error::SingularMomentum => RelspinStatus::SingularMomentum,
        Error::ZOutOfRange { .. } => RelspinStatus::OutOfRange,
        Error::Supercritical { .. } => RelspinStatus::Supercritical,
        Error::InvalidAlpha { .. }
        | Error::InvalidQuantumNumbers { .. }
        | Error::InvalidRotationAxis { .. }
        | Error::OrderTooSmall { .. }
        | Error::InvalidAxis { .. } => RelspinStatus::InvalidArgument,
        Error::NotHermitian { .. } | Error::QuadratureNotConverged { .. } | Error::GridMismatch => {
            RelspinStatus::NumericalFailure
        }
    }
}

fn constants_from(alpha_el: f64) -> Result<PhysicalConstants, RelspinStatus> {
    if alpha_el <= 0.0 {
        Ok(PhysicalConstants::default())
    } else {
        PhysicalConstants::from_alpha(alpha_el).map_err(|e| status_of(&e))
    }
}

fn kind_from(kind: RelspinSpinKind) -> SpinKind {
    match kind {
        RelspinSpinKind::Pauli => SpinKind::Pauli,
        RelspinSpinKind::FoldyWouthuysen => SpinKind::FoldyWouthuysen,
        RelspinSpinKind::Czachor => SpinKind::Czachor,
        RelspinSpinKind::Frenkel => SpinKind::Frenkel,
        RelspinSpinKind::Chakrabarti => SpinKind::Chakrabarti,
        RelspinSpinKind::Pryce => SpinKind::Pryce,
    }
}

fn kind_to(kind: SpinKind) -> RelspinSpinKind {
    match kind {
        SpinKind::Pauli => RelspinSpinKind::Pauli,
        SpinKind::FoldyWouthuysen => RelspinSpinKind::FoldyWouthuysen,
        SpinKind::Czachor => RelspinSpinKind::Czachor,
        SpinKind::Frenkel => RelspinSpinKind::Frenkel,
        SpinKind::Chakrabarti => RelspinSpinKind::Chakrabarti,
        SpinKind::Pryce => RelspinSpinKind::Pryce,
    }
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn relspin_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Human-readable description of a status code (static string).
#[no_mangle]
pub extern "C" fn relspin_status_message(status: RelspinStatus) -> *const c_char {
    let message: &'static str = match status {
        RelspinStatus::Ok => "ok\0",
        RelspinStatus::NullArgument => "null pointer argument\0",
        RelspinStatus::InvalidArgument => "invalid argument\0",
        RelspinStatus::OutOfRange => "atomic number outside 1..=137\0",
        RelspinStatus::Supercritical => "supercritical charge: alpha_el * Z >= 1\0",
        RelspinStatus::SingularMomentum => "operator undefined at zero momentum\0",
        RelspinStatus::NumericalFailure => "numerical failure\0",
    };
    message.as_ptr() as *const c_char
}

/// The built-in CODATA value of the fine-structure constant.
#[no_mangle]
pub extern "C" fn relspin_default_alpha_el() -> f64 {
    relspin::dirac::ALPHA_EL_DEFAULT
}

/// Bound energy `E(n, j)` in atomic units, rest energy included. `twice_j`
/// is `2 j` (so 1 for the ground state). Pass `alpha_el <= 0` for the
/// default constant.
///
/// # Safety
///
/// `out_energy` must be null or valid for writing one `f64`.
#[no_mangle]
pub unsafe extern "C" fn relspin_bound_energy(
    n: u32,
    twice_j: i32,
    z: u32,
    alpha_el: f64,
    out_energy: *mut f64,
) -> RelspinStatus {
    if out_energy.is_null() {
        return RelspinStatus::NullArgument;
    }
    let consts = match constants_from(alpha_el) {
        Ok(c) => c,
        Err(status) => return status,
    };
    if twice_j <= 0 {
        return RelspinStatus::InvalidArgument;
    }
    let j = twice_j as f64 / 2.0;
    let q = match QuantumNumbers::new(n, j, 0.5, -((j + 0.5) as i32)) {
        Ok(q) => q,
        Err(e) => return status_of(&e),
    };
    match sommerfeld_energy(&q, z, &consts) {
        Ok(e) => {
            unsafe { *out_energy = e };
            RelspinStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Build a ground state. Orders of `0` select the defaults (32 radial, 8
/// angular). On success `*out` owns the handle; release it with
/// [`relspin_state_free`].
///
/// # Safety
///
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn relspin_state_new(
    z: u32,
    orientation: RelspinOrientation,
    radial_order: u32,
    angular_order: u32,
    alpha_el: f64,
    out: *mut *mut RelspinState,
) -> RelspinStatus {
    if out.is_null() {
        return RelspinStatus::NullArgument;
    }
    let consts = match constants_from(alpha_el) {
        Ok(c) => c,
        Err(status) => return status,
    };
    let defaults = GridConfig::default();
    let config = GridConfig {
        radial_order: if radial_order == 0 {
            defaults.radial_order
        } else {
            radial_order as usize
        },
        angular_order: if angular_order == 0 {
            defaults.angular_order
        } else {
            angular_order as usize
        },
    };
    match ZPoint::new(z, config, &consts) {
        Ok(point) => {
            let orientation = match orientation {
                RelspinOrientation::Up => Orientation::Up,
                RelspinOrientation::Down => Orientation::Down,
            };
            let handle = Box::new(RelspinState { point, orientation });
            unsafe { *out = Box::into_raw(handle) };
            RelspinStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a state handle. Passing null is a no-op.
///
/// # Safety
///
/// `state` must be null or a pointer obtained from [`relspin_state_new`]
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn relspin_state_free(state: *mut RelspinState) {
    if !state.is_null() {
        drop(unsafe { Box::from_raw(state) });
    }
}

/// Ground-state exponent, bound energy and grid norm of a state. Null output
/// pointers are skipped.
///
/// # Safety
///
/// `state` must be a live pointer from [`relspin_state_new`].
#[no_mangle]
pub unsafe extern "C" fn relspin_state_info(
    state: *const RelspinState,
    out_gamma: *mut f64,
    out_energy: *mut f64,
    out_norm: *mut f64,
) -> RelspinStatus {
    let Some(state) = (unsafe { state.as_ref() }) else {
        return RelspinStatus::NullArgument;
    };
    let spec = match state.orientation {
        Orientation::Up => &state.point.spec_up,
        Orientation::Down => &state.point.spec_down,
    };
    if !out_gamma.is_null() {
        unsafe { *out_gamma = spec.gamma };
    }
    if !out_energy.is_null() {
        unsafe { *out_energy = spec.energy };
    }
    if !out_norm.is_null() {
        unsafe { *out_norm = state.point.field(state.orientation).norm() };
    }
    RelspinStatus::Ok
}

/// Spin expectation of the state for one family and axis (1..3), with the
/// variance and the order-doubling quadrature error estimate. Null output
/// pointers are skipped.
///
/// # Safety
///
/// `state` must be a live pointer from [`relspin_state_new`].
#[no_mangle]
pub unsafe extern "C" fn relspin_spin_expectation(
    state: *const RelspinState,
    kind: RelspinSpinKind,
    axis: u32,
    out_value: *mut f64,
    out_variance: *mut f64,
    out_error_estimate: *mut f64,
) -> RelspinStatus {
    let Some(state) = (unsafe { state.as_ref() }) else {
        return RelspinStatus::NullArgument;
    };
    let axis = match u8::try_from(axis).ok().and_then(|a| Axis::try_from(a).ok()) {
        Some(a) => a,
        None => return RelspinStatus::InvalidArgument,
    };
    match state
        .point
        .expectation(kind_from(kind), state.orientation, axis)
    {
        Ok(r) => {
            if !out_value.is_null() {
                unsafe { *out_value = r.value };
            }
            if !out_variance.is_null() {
                unsafe { *out_variance = r.variance };
            }
            if !out_error_estimate.is_null() {
                unsafe { *out_error_estimate = r.quadrature_error_estimate };
            }
            RelspinStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Run the sampled property sweep and fill six table rows (one per family,
/// in enumeration order). `out_matches` is set to 1 when all rows reproduce
/// the reference pattern.
///
/// # Safety
///
/// `rows` must be null or point to an array of at least six
/// `RelspinTableRow` slots.
#[no_mangle]
pub unsafe extern "C" fn relspin_table_report(
    samples: u32,
    seed: u64,
    alpha_el: f64,
    rows: *mut RelspinTableRow,
    out_matches: *mut u8,
) -> RelspinStatus {
    let consts = match constants_from(alpha_el) {
        Ok(c) => c,
        Err(status) => return status,
    };
    if samples == 0 {
        return RelspinStatus::InvalidArgument;
    }
    let reports = match relspin::checks::table1_report(samples as usize, seed, &consts) {
        Ok(r) => r,
        Err(e) => return status_of(&e),
    };
    let all_match = reports.iter().all(|r| r.matches_reference());
    if !rows.is_null() {
        for (i, r) in reports.iter().enumerate() {
            let row = RelspinTableRow {
                kind: kind_to(r.kind),
                commutes_with_h0: r.commutes_with_h0 as u8,
                algebra_holds: r.algebra_holds as u8,
                eigenvalues_half: r.eigenvalues_half as u8,
                covariance_holds: r.covariance_holds as u8,
                matches_reference: r.matches_reference() as u8,
                h0_defect: r.h0_defect,
                algebra_defect: r.algebra_defect,
                eigenvalue_deviation: r.eigenvalue_deviation,
                covariance_defect: r.covariance_defect,
            };
            unsafe { rows.add(i).write(row) };
        }
    }
    if !out_matches.is_null() {
        unsafe { *out_matches = all_match as u8 };
    }
    RelspinStatus::Ok
}
