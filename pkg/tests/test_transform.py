import numpy as np
import pytest

from opsqft.fields import Domain, QuaternionField2D
from opsqft.quat import QI, QJ, PureUnitQuaternion
from opsqft.split import make_context, split_arr, swapped_context
from opsqft.transform import (
    Family,
    Spectrum,
    TransformVariant,
    VariantMismatch,
    forward_direct,
    forward_fast,
    inverse_direct,
    inverse_fast,
    split_spectra,
    transform_commutes_with_split,
)

from oracle import as_samples, inverse_reference, max_component_diff, transform_reference

SEED = 551


def axis_triple(u):
    return (u.x, u.y, u.z)


def context_zoo(rng):
    f = PureUnitQuaternion(*rng.standard_normal(3))
    return [
        make_context(f, PureUnitQuaternion(*rng.standard_normal(3))),
        make_context(f, f),
        make_context(f, PureUnitQuaternion(-f.x, -f.y, -f.z)),
    ]


def rand_field(rng, n1, n2, domain=Domain.SPATIAL):
    return QuaternionField2D(rng.standard_normal((n1, n2, 4)), domain)


def test_forward_direct_matches_scalar_reference():
    rng = np.random.default_rng(SEED)
    for ctx in context_zoo(rng):
        for n1, n2 in ((2, 3), (3, 3), (4, 4)):
            h = rand_field(rng, n1, n2)
            samples = as_samples(h.data)
            for family in Family:
                got = forward_direct(TransformVariant(family, ctx), h)
                want = transform_reference(samples, axis_triple(ctx.f),
                                           axis_triple(ctx.g), family.value)
                assert max_component_diff(as_samples(got.data), want) < 1e-11


def test_inverse_direct_matches_scalar_reference():
    rng = np.random.default_rng(SEED + 1)
    for ctx in context_zoo(rng):
        for n1, n2 in ((2, 3), (4, 4)):
            for family in Family:
                variant = TransformVariant(family, ctx)
                spectrum = Spectrum(rand_field(rng, n1, n2, Domain.FREQUENCY), variant)
                got = inverse_direct(variant, spectrum)
                want = inverse_reference(as_samples(spectrum.data), axis_triple(ctx.f),
                                         axis_triple(ctx.g), family.value)
                assert max_component_diff(as_samples(got.data), want) < 1e-12


def test_fast_matches_direct():
    rng = np.random.default_rng(SEED + 2)
    for ctx in context_zoo(rng):
        for n1, n2 in ((1, 1), (2, 3), (4, 4), (4, 6), (5, 5), (8, 8)):
            h = rand_field(rng, n1, n2)
            for family in Family:
                variant = TransformVariant(family, ctx)
                sd = forward_direct(variant, h)
                sf = forward_fast(variant, h)
                scale = max(float(np.sqrt(np.mean(sd.data ** 2))), 1e-30)
                assert np.max(np.abs(sd.data - sf.data)) / scale < 1e-12
                spectrum = Spectrum(rand_field(rng, n1, n2, Domain.FREQUENCY), variant)
                bd = inverse_direct(variant, spectrum)
                bf = inverse_fast(variant, spectrum)
                scale = max(float(np.sqrt(np.mean(bd.data ** 2))), 1e-30)
                assert np.max(np.abs(bd.data - bf.data)) / scale < 1e-12


def test_round_trip_invertible_families():
    rng = np.random.default_rng(SEED + 3)
    for ctx in context_zoo(rng):
        for family in (Family.TWO_SIDED, Family.CONJUGATE):
            variant = TransformVariant(family, ctx)
            for n1, n2 in ((1, 1), (2, 3), (8, 8)):
                h = rand_field(rng, n1, n2)
                assert np.max(np.abs(
                    inverse_fast(variant, forward_fast(variant, h)).data
                    - h.data)) < 1e-12
                assert np.max(np.abs(
                    inverse_direct(variant, forward_direct(variant, h)).data
                    - h.data)) < 1e-12


def test_one_sample_grid():
    # every phase is zero on a 1x1 grid
    rng = np.random.default_rng(SEED + 4)
    ctx = make_context(QI, QJ)
    h = rand_field(rng, 1, 1)
    for family in Family:
        variant = TransformVariant(family, ctx)
        spectrum = forward_fast(variant, h)
        want = h.data * np.array([1.0, -1, -1, -1]) \
            if family is Family.CONJUGATE else h.data
        assert np.max(np.abs(spectrum.data - want)) < 1e-15
        assert np.max(np.abs(inverse_fast(variant, spectrum).data - h.data)) < 1e-15


def test_real_linearity():
    rng = np.random.default_rng(SEED + 5)
    ctx = context_zoo(rng)[0]
    for family in Family:
        variant = TransformVariant(family, ctx)
        h1 = rand_field(rng, 4, 4)
        h2 = rand_field(rng, 4, 4)
        combo = QuaternionField2D(2.5 * h1.data - 0.75 * h2.data)
        got = forward_fast(variant, combo)
        want = 2.5 * forward_fast(variant, h1).data \
            - 0.75 * forward_fast(variant, h2).data
        assert np.max(np.abs(got.data - want)) < 1e-12


def test_delta_field_has_constant_spectrum():
    rng = np.random.default_rng(SEED + 6)
    ctx = context_zoo(rng)[0]
    variant = TransformVariant(Family.TWO_SIDED, ctx)
    data = np.zeros((4, 6, 4))
    q = rng.standard_normal(4)
    data[0, 0] = q
    spectrum = forward_fast(variant, QuaternionField2D(data))
    assert np.max(np.abs(spectrum.data - q)) < 1e-13


def test_constant_field_has_delta_spectrum():
    rng = np.random.default_rng(SEED + 7)
    ctx = context_zoo(rng)[0]
    variant = TransformVariant(Family.TWO_SIDED, ctx)
    q = rng.standard_normal(4)
    data = np.broadcast_to(q, (4, 6, 4)).copy()
    spectrum = forward_fast(variant, QuaternionField2D(data))
    want = np.zeros((4, 6, 4))
    want[0, 0] = 24 * q
    assert np.max(np.abs(spectrum.data - want)) < 1e-12


def test_spectrum_is_frequency_tagged():
    rng = np.random.default_rng(SEED + 8)
    variant = TransformVariant(Family.TWO_SIDED, make_context(QI, QJ))
    spectrum = forward_fast(variant, rand_field(rng, 2, 2))
    assert spectrum.field.domain is Domain.FREQUENCY
    assert spectrum.data is spectrum.field.data
    back = inverse_fast(variant, spectrum)
    assert back.domain is Domain.SPATIAL


def test_variant_mismatch_rejected():
    rng = np.random.default_rng(SEED + 9)
    ctx = make_context(QI, QJ)
    spectrum = forward_fast(TransformVariant(Family.TWO_SIDED, ctx),
                        rand_field(rng, 2, 2))
    other_family = TransformVariant(Family.CONJUGATE, ctx)
    with pytest.raises(VariantMismatch):
        inverse_fast(other_family, spectrum)
    other_axes = TransformVariant(Family.TWO_SIDED, make_context(QI, QI))
    with pytest.raises(VariantMismatch):
        inverse_direct(other_axes, spectrum)


def test_split_spectra_sum_to_full():
    rng = np.random.default_rng(SEED + 10)
    for ctx in context_zoo(rng):
        h = rand_field(rng, 4, 4)
        for family in Family:
            variant = TransformVariant(family, ctx)
            sp, sm = split_spectra(variant, h)
            full = forward_fast(variant, h)
            assert np.max(np.abs(sp.data + sm.data - full.data)) < 1e-12


def test_part_spectra_stay_plane_aligned():
    rng = np.random.default_rng(SEED + 11)
    ctx = context_zoo(rng)[0]
    h = rand_field(rng, 4, 4)

    sp, sm = split_spectra(TransformVariant(Family.TWO_SIDED, ctx), h)
    assert np.max(np.abs(split_arr(ctx, sp.data)[1])) < 1e-13
    assert np.max(np.abs(split_arr(ctx, sm.data)[0])) < 1e-13

    # conjugation maps each plane onto its reversed-pair counterpart
    rev = swapped_context(ctx)
    sp, sm = split_spectra(TransformVariant(Family.CONJUGATE, ctx), h)
    assert np.max(np.abs(split_arr(rev, sp.data)[1])) < 1e-13
    assert np.max(np.abs(split_arr(rev, sm.data)[0])) < 1e-13


def test_transform_commutes_with_split():
    rng = np.random.default_rng(SEED + 12)
    for ctx in context_zoo(rng):
        h = rand_field(rng, 4, 6)
        for family in Family:
            report = transform_commutes_with_split(
                TransformVariant(family, ctx), h)
            assert report.passed
            assert max(report.residual_plus, report.residual_minus) < 1e-12
            assert report.tolerance == 1e-10


def test_two_sided_energy_preserved():
    rng = np.random.default_rng(SEED + 13)
    ctx = context_zoo(rng)[0]
    variant = TransformVariant(Family.TWO_SIDED, ctx)
    h = rand_field(rng, 8, 8)
    spectrum = forward_fast(variant, h)
    e_grid = float(np.sum(h.data ** 2))
    e_freq = float(np.sum(spectrum.data ** 2)) / 64
    assert e_freq == pytest.approx(e_grid, rel=1e-12)


def test_phase_angle_part_spectra_are_lines():
    rng = np.random.default_rng(SEED + 14)
    for ctx in context_zoo(rng):
        variant = TransformVariant(Family.PHASE_ANGLE, ctx)
        h = rand_field(rng, 4, 6)
        plus, minus = split_arr(ctx, h.data)
        fp = forward_fast(variant, QuaternionField2D(plus)).data
        fm = forward_fast(variant, QuaternionField2D(minus)).data
        assert np.max(np.abs(fp - fp[:1, :, :])) < 1e-12
        assert np.max(np.abs(fm - fm[:, :1, :])) < 1e-12
