import pytest

from cohadj.computad import all_squiggles, faces, generate_subcomputad
from cohadj.errors import (Degenerate, DimZero, FaceNotInBase, IsFillable, NotAtomic, NotFillable,
                           NotParental, TruncationTooSmall)
from cohadj.fillable import (cell_certificate, classify, distinguished_face, filtration, fillable_parent,
                             is_fillable, is_parental, other_parent)
from cohadj.operators import act, face
from cohadj.squiggle import NAMED, is_atomic, is_degenerate, make, validate, whisker

N = NAMED


def gen(*names, d=3, w=6):
    return generate_subcomputad([N[x] for x in names], d, w)


def test_classification():
    assert classify(N["f"]).fillable and classify(N["f"]).depth is None
    assert classify(N["eps"]).depth == 1
    assert classify(N["beta"]).depth == 2
    assert classify(N["tau"]).depth == 2
    assert classify(N["omega"]).depth == 3
    assert not is_fillable(N["alpha"])
    assert not is_fillable(N["mu"])
    assert not is_fillable(N["u"])
    assert not is_fillable(validate(1, ["-", 1, "-", 1, "-"]))  # not atomic


def test_parent_goldens():
    a = make(4, (0, 3, 2, 3, 1, 4, 3, 5))
    assert fillable_parent(a) == make(5, (0, 3, 2, 4, 1, 5, 4, 6))
    assert other_parent(a) == make(5, (0, 4, 2, 3, 1, 5, 3, 6))
    b = make(4, (5, 2, 3, 1, 4, 3, 5))
    assert fillable_parent(b) == make(5, (0, 5, 2, 3, 1, 4, 3, 6))
    assert act(fillable_parent(b), face(5, 5)) == whisker("left", "f", b)
    assert fillable_parent(N["u"]) == N["eps"]
    assert fillable_parent(N["eta"]) == N["beta"]
    assert fillable_parent(N["alpha"]) == N["omega"]
    assert fillable_parent(N["mu"]) == N["tau"]


def test_parent_errors():
    with pytest.raises(IsFillable):
        fillable_parent(N["eps"])
    with pytest.raises(NotAtomic):
        fillable_parent(validate(1, ["-", 1, "-", 1, "-"]))
    with pytest.raises(Degenerate):
        fillable_parent(validate(1, ["+", "-"]))
    with pytest.raises(NotFillable):
        distinguished_face(N["alpha"])
    with pytest.raises(DimZero):
        distinguished_face(N["f"])


def _atoms(d, w):
    return [a for a in all_squiggles(d, w) if not a.is_identity() and is_atomic(a) and not is_degenerate(a)]


def test_parent_and_diamond_are_inverse():
    for d in range(0, 4):
        for a in _atoms(d, 7):
            if is_fillable(a):
                if d > 0:
                    assert fillable_parent(distinguished_face(a)) == a
            elif d < 3:
                p = fillable_parent(a)
                assert is_fillable(p) and distinguished_face(p) == a


def test_two_parent_property_by_search():
    """A non-fillable atom with codomain - is a codimension-1 face of exactly
    two fillable arrows of the same width, at index a₁, with depths a₁ and a₁+1."""
    for d in range(1, 3):
        up = [c for c in _atoms(d + 1, 7) if is_fillable(c)]
        for a in _atoms(d, 7):
            if is_fillable(a) or a.cod != "-":
                continue
            hits = [c for c in up if c.width == a.width and a in faces(c)]
            assert len(hits) == 2
            k = a.word[1]
            assert all(act(c, face(k, d + 1)) == a for c in hits)
            assert sorted(classify(c).depth for c in hits) == [k, k + 1]
            assert set(hits) == {fillable_parent(a), other_parent(a)}


def test_plus_parent_unique_by_search():
    for d in range(0, 3):
        up = [c for c in _atoms(d + 1, 7) if is_fillable(c)]
        for a in _atoms(d, 6):
            if a.cod != "+":
                continue
            fa = whisker("left", "f", a)
            hits = [c for c in up if fa in faces(c)]
            assert hits == [fillable_parent(a)]
            assert hits[0].width == a.width + 1 and hits[0].word[1] == d + 1


def test_parental_examples():
    for names in (("f",), ("eps",), ("beta",), ("omega", "tau")):
        assert is_parental(gen(*names)).parental
    rep = is_parental(gen("alpha", "beta"))
    assert not rep.parental and rep.missing == (N["alpha"],)


def test_filtration_beta_into_omega_tau():
    stages = filtration(gen("beta"), gen("omega", "tau"))
    assert [(s.triple, [c.label() for c in s.certificates]) for s in stages] == [
        ((4, 2, 3), ["Type2{3,2}"]),
        ((4, 3, 3), ["Type3{3}"]),
    ]
    assert stages[0].arrows == (N["tau"],) and stages[1].arrows == (N["omega"],)
    tau_cert = stages[0].certificates[0]
    assert set(tau_cert.new_arrows) == {N["tau"], N["mu"]}
    omega_cert = stages[1].certificates[0]
    assert omega_cert.diamond == N["alpha"]
    # every attaching face is present before the stage
    base = gen("beta")
    for i, x in tau_cert.attaching_faces.items():
        assert x in base


def test_filtration_eps_into_beta():
    stages = filtration(gen("eps"), gen("beta"))
    assert [(s.triple, [c.label() for c in s.certificates]) for s in stages] == [((3, 2, 2), ["Type3{2}"])]


def test_filtration_chain():
    chain = [gen("f"), gen("eps"), gen("beta"), gen("omega", "tau")]
    for small, big in zip(chain, chain[1:]):
        assert filtration(small, big)


def test_filtration_errors():
    with pytest.raises(NotParental):
        filtration(gen("f"), gen("alpha", "beta"))
    with pytest.raises(TruncationTooSmall):
        filtration(gen("beta", w=4), gen("omega", "tau", w=4))


def test_cell_certificate_errors():
    with pytest.raises(FaceNotInBase) as e:
        cell_certificate(N["omega"], gen("eps"))
    assert e.value.index in range(4)
    with pytest.raises(NotFillable):
        cell_certificate(N["alpha"], gen("eps"))
    with pytest.raises(DimZero):
        cell_certificate(N["f"], gen("eps"))
