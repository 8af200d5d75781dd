"""The fourth power of the antipode, written two independent ways.

The headline identity conjugates by the modular group-like on the inside
and by the dual modular group-like acting through the coproduct slots on
the outside.  The factorisation route assembles the same map from the
modular automorphisms, checking each intermediate factor on its own so a
failure points at the broken step rather than the composite.
"""

from __future__ import annotations

from .errors import NumericalFailure
from .hopf import Elem, HopfData
from .integrals import ModularData
from .linalg import Mat, mat_inverse
from .report import Check, fail, ok, skip

from .duality import act_left, act_right


def s2_matrix(h: HopfData) -> Mat:
    return h.antipode.mul(h.antipode)


def _matrix_order(m: Mat, cap: int, what: str) -> int:
    acc = m
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc.mul(m)
    raise NumericalFailure(f"order of {what} exceeds {cap}")


def s_order(h: HopfData) -> int:
    """Smallest k with S^k = id; finite whenever the data is a Hopf algebra."""
    return _matrix_order(h.antipode, 32 * h.dim * h.dim, f"{h.name} antipode")


def s2_order(h: HopfData) -> int:
    """Smallest k with (S^2)^k = id."""
    return _matrix_order(s2_matrix(h), 16 * h.dim * h.dim, f"{h.name} S^2")


def radford_check(h: HopfData, md: ModularData, hd: HopfData,
                  delta_hat: Elem) -> Check:
    """S^4(a) = delta^-1 (deltahat |> a <| deltahat^-1) delta on the basis."""
    law = "S^4(a)=delta^-1(deltahat|>a<|deltahat^-1)delta"
    s2 = s2_matrix(h)
    s4 = s2.mul(s2)
    delta_hat_inv = hd.antipode_of(delta_hat)
    for i in range(h.dim):
        a = h.basis(i)
        lhs = h.apply(s4, a)
        mid = act_left(h, delta_hat, act_right(h, a, delta_hat_inv))
        rhs = h.mul_many(md.delta_inv, mid, md.delta)
        if lhs != rhs:
            return fail("radford-s4", law, f"fails at basis {i}")
    return ok("radford-s4", law, f"ord(S^2)={s2_order(h)}")


def radford_factorization(h: HopfData, md: ModularData, hd: HopfData,
                          delta_hat: Elem) -> Check:
    """Each factor of the fourth-power identity separately, then their
    composition, so a failure names the broken step: the two dual-action
    halves of S^2, the inner relation between the two automorphisms,
    S^2(delta)=delta, and finally the assembled sandwich."""
    law = ("deltahat|>a=S^2(sigmainv(a)), a<|deltahat^-1=S^2(sigma'(a)), "
           "sigma'(a)=delta sigma(a) delta^-1, S^2(delta)=delta, composed=S^4")
    s2 = s2_matrix(h)
    s4 = s2.mul(s2)
    if h.apply(s2, md.delta) != md.delta:
        return fail("radford-factorization", law, "S^2 moves the modular element")
    sigma_inv = mat_inverse(md.sigma)
    delta_hat_inv = hd.antipode_of(delta_hat)
    for i in range(h.dim):
        a = h.basis(i)
        if act_left(h, delta_hat, a) != h.apply(s2, h.apply(sigma_inv, a)):
            return fail("radford-factorization", law, f"left factor fails at basis {i}")
        if act_right(h, a, delta_hat_inv) != h.apply(s2, h.apply(md.sigma_prime, a)):
            return fail("radford-factorization", law, f"right factor fails at basis {i}")
        if h.apply(md.sigma_prime, a) != h.mul_many(md.delta, h.apply(md.sigma, a),
                                                    md.delta_inv):
            return fail("radford-factorization", law, f"inner relation fails at basis {i}")
        path = h.apply(md.sigma_prime, a)
        path = h.apply(s2, path)
        path = h.apply(sigma_inv, path)
        path = h.apply(s2, path)
        path = h.mul_many(md.delta_inv, path, md.delta)
        if path != h.apply(s4, a):
            return fail("radford-factorization", law, f"composition fails at basis {i}")
    return ok("radford-factorization", law)


def group_like_roots(h: HopfData, likes: list, target: Elem) -> list:
    """All group-likes squaring to the target, in the canonical ordering."""
    return [g for g in likes if h.mul(g, g) == target]


def counimodular_check(h: HopfData, md: ModularData, hd: HopfData,
                       delta_hat: Elem, likes: list) -> Check:
    """When the dual modular element is trivial, S^2 itself is inner-modular:
    phi(ab) = phi(b S^2(a)); with a group-like square root r of delta it is
    plain conjugation S^2(a) = r^-1 a r and phi( . r) is a trace."""
    law = "deltahat=1^ => phi(ab)=phi(b S^2(a)); r^2=delta => S^2(a)=r^-1 a r, phi(ab r)=phi(ba r)"
    if delta_hat != Elem(h.counit.coords):
        return skip("s2-conjugation", law, "not-counimodular")
    s2 = s2_matrix(h)
    for i in range(h.dim):
        for j in range(h.dim):
            lhs = h.functional_of(md.phi, h.mul(h.basis(i), h.basis(j)))
            rhs = h.functional_of(md.phi, h.mul(h.basis(j), h.apply(s2, h.basis(i))))
            if lhs != rhs:
                return fail("s2-conjugation", law, f"phi twist fails at ({i},{j})")
    root = None
    for cand in group_like_roots(h, likes, md.delta):
        cand_inv = h.antipode_of(cand)
        if all(h.apply(s2, h.basis(i)) == h.mul_many(cand_inv, h.basis(i), cand)
               for i in range(h.dim)):
            root = cand
            break
    if root is None:
        # no root of delta implements S^2; the square of the statement still holds
        s4 = s2.mul(s2)
        for i in range(h.dim):
            a = h.basis(i)
            if h.apply(s4, a) != h.mul_many(md.delta_inv, a, md.delta):
                return fail("s2-conjugation", law, f"S^4 inner form fails at basis {i}")
        return ok("s2-conjugation", law,
                  "no conjugating group-like square root of delta; squared form verified")
    for i in range(h.dim):
        for j in range(h.dim):
            lhs = h.functional_of(md.phi, h.mul(h.mul(h.basis(i), h.basis(j)), root))
            rhs = h.functional_of(md.phi, h.mul(h.mul(h.basis(j), h.basis(i)), root))
            if lhs != rhs:
                return fail("s2-conjugation", law, f"trace property fails at ({i},{j})")
    return ok("s2-conjugation", law)


def half_power_check(h: HopfData, md: ModularData, hd: HopfData, delta_hat: Elem,
                     likes: list, dual_likes: list) -> Check:
    """With group-like square roots on both sides the sandwich halves:
    S^2(a) = r^-1 (rhat |> a <| rhat^-1) r."""
    law = "S^2(a)=r^-1(rhat|>a<|rhat^-1)r with r^2=delta, rhat^2=deltahat"
    roots = group_like_roots(h, likes, md.delta)
    dual_roots = group_like_roots(hd, dual_likes, delta_hat)
    if not roots or not dual_roots:
        return skip("s2-half-power", law, "no-group-like-square-root")
    s2 = s2_matrix(h)

    def works(root, dual_root):
        root_inv = h.antipode_of(root)
        dual_root_inv = hd.antipode_of(dual_root)
        for i in range(h.dim):
            a = h.basis(i)
            mid = act_left(h, dual_root, act_right(h, a, dual_root_inv))
            if h.apply(s2, a) != h.mul_many(root_inv, mid, root):
                return False
        return True

    # the sandwich needs a compatible pair of roots, so scan them all
    if any(works(r, rh) for r in roots for rh in dual_roots):
        return ok("s2-half-power", law)
    return fail("s2-half-power", law, "square roots exist but no pair halves S^4")
