"""Diagonal automorphisms acting on graded Jacobian quotients.

A diagonal automorphism of projective space scales each coordinate by a
power of a fixed root of unity.  When the defining form is an
eigenvector, every graded piece of its Jacobian quotient splits into
character eigenspaces, and the multiset of characters showing up in the
pieces matching the Hodge decomposition constrains which eigenspaces
can contain rational algebraic classes: any class defined over the
rationals spreads over a full Galois orbit of characters.  The bound
computed here counts the middle-degree dimensions whose orbits stay
clear of the outer pieces, plus one for the hyperplane class.
"""

from __future__ import annotations

from math import gcd

from . import jacobian


class NotInvariant(ValueError):
    """The form is not an eigenvector of the given automorphism."""


class NotSmooth(ValueError):
    """An operation requiring a smooth hypersurface got a singular one."""


class DiagonalAutomorphism:
    """x_i -> zeta**e_i x_i for a primitive root of unity of given order.

    Exponents are normalised into [0, modulus); ``twist`` is the
    character of the coordinate volume form, the sum of the exponents.
    """

    __slots__ = ("modulus", "exponents")

    def __init__(self, exponents, modulus):
        modulus = int(modulus)
        if modulus < 1:
            raise ValueError("modulus must be a positive integer")
        self.modulus = modulus
        self.exponents = tuple(int(e) % modulus for e in exponents)

    @property
    def twist(self):
        return sum(self.exponents) % self.modulus

    def character(self, exps):
        """Character of a monomial with the given exponent tuple."""
        if len(exps) != len(self.exponents):
            raise ValueError("exponent tuple has the wrong length")
        return sum(a * b for a, b in zip(exps, self.exponents)) % self.modulus

    def __eq__(self, other):
        if not isinstance(other, DiagonalAutomorphism):
            return NotImplemented
        return (self.modulus, self.exponents) == (other.modulus, other.exponents)

    def __repr__(self):
        return f"DiagonalAutomorphism(exponents={self.exponents}, modulus={self.modulus})"


def check_invariance(f, sigma):
    """True iff every monomial of f has the same character.

    Eigenvectors up to scalar count as invariant; the common character
    need not be zero.
    """
    if f.is_zero():
        return True
    chars = {sigma.character(e) for e in f.terms}
    return len(chars) == 1


class CharacterSpectrum:
    """Per-character dimensions of one graded piece.

    ``histogram`` maps characters to positive eigenspace dimensions;
    characters with zero dimension are omitted.  ``twisted`` records
    whether the volume-form character was added to every entry.
    """

    __slots__ = ("degree", "modulus", "histogram", "twisted")

    def __init__(self, degree, modulus, histogram, twisted):
        self.degree = degree
        self.modulus = modulus
        self.histogram = dict(histogram)
        self.twisted = twisted

    def dimension(self, character):
        return self.histogram.get(character % self.modulus, 0)

    @property
    def total(self):
        return sum(self.histogram.values())

    def characters(self):
        return sorted(self.histogram)

    def __repr__(self):
        inner = ", ".join(f"{c}: {d}" for c, d in sorted(self.histogram.items()))
        tag = "twisted" if self.twisted else "plain"
        return f"CharacterSpectrum(degree={self.degree}, {tag}, {{{inner}}})"


def character_spectrum(hring, sigma, degree, twisted=False):
    """Eigenspace dimensions of the degree-k quotient piece.

    Works character by character: ambient monomials of one character
    minus the exact rank of the matching block of the Jacobian slice.
    The split is valid because each generator monomial times a partial
    is itself an eigenvector, so the slice matrix is block diagonal.
    """
    if not check_invariance(hring.poly, sigma):
        raise NotInvariant("form is not an eigenvector of the automorphism")
    if len(sigma.exponents) != hring.nvars:
        raise NotInvariant("automorphism has the wrong number of exponents")
    symmetry = (sigma.exponents, sigma.modulus)
    blocks = hring._symmetric_blocks(degree, symmetry=symmetry)
    histogram = {}
    for c, cols, free, _, _ in blocks:
        if free:
            histogram[c] = len(free)
    total = hring.quotient_dim(degree)
    if sum(histogram.values()) != total:
        raise AssertionError("character dimensions do not add up")
    if twisted:
        shift = sigma.twist
        histogram = {(c + shift) % sigma.modulus: d
                     for c, d in histogram.items()}
    return CharacterSpectrum(degree, sigma.modulus, histogram, twisted)


def galois_orbit(character, modulus):
    """Orbit of a character under multiplication by units mod N."""
    character %= modulus
    return frozenset(u * character % modulus
                     for u in range(1, modulus + 1) if gcd(u, modulus) == 1)


class PicardBoundResult:
    """Outcome of the orbit scan over the middle character spectrum.

    ``bound`` follows the avoid-the-outer-spectra rule: one plus the
    middle dimensions of characters whose full Galois orbit misses the
    twisted outer spectra.  ``strict_bound`` keeps a character only when
    every orbit member has a nonzero middle dimension, which is the
    unconditionally rigorous variant: a rational algebraic class forces
    equal dimensions across its whole orbit.  The two rules agree
    whenever the outer and middle character sets are disjoint, recorded
    in ``spectra_disjoint``; only then is ``bound`` itself certified as
    an upper bound.
    """

    __slots__ = ("bound", "strict_bound", "kept", "kept_strict",
                 "middle", "outer", "spectra_disjoint", "multiplicity_free")

    def __init__(self, bound, strict_bound, kept, kept_strict, middle, outer,
                 spectra_disjoint, multiplicity_free):
        self.bound = bound
        self.strict_bound = strict_bound
        self.kept = kept
        self.kept_strict = kept_strict
        self.middle = middle
        self.outer = outer
        self.spectra_disjoint = spectra_disjoint
        self.multiplicity_free = multiplicity_free

    def __repr__(self):
        return (f"PicardBoundResult(bound={self.bound}, "
                f"strict_bound={self.strict_bound}, kept={self.kept}, "
                f"kept_strict={self.kept_strict}, "
                f"spectra_disjoint={self.spectra_disjoint})")


def picard_upper_bound(hring, sigma):
    """Orbit-scan bound on the Picard number of a smooth surface.

    Uses the graded pieces in degrees d-4, 2d-4, 3d-4 of a quartic or
    higher surface in projective three-space, with every character
    shifted by the volume-form twist so that all three pieces are
    compared on the same scale.
    """
    if hring.nvars != 4:
        raise ValueError("the bound applies to surfaces in P^3 (four variables)")
    d = hring.degree
    if d < 4:
        raise ValueError("need degree at least 4")
    if not check_invariance(hring.poly, sigma):
        raise NotInvariant("form is not an eigenvector of the automorphism")
    smooth = jacobian.is_smooth_artinian(hring)
    if not smooth:
        raise NotSmooth(f"quotient does not vanish above the socle: {smooth!r}")
    outer_lo = character_spectrum(hring, sigma, d - 4, twisted=True)
    middle = character_spectrum(hring, sigma, 2 * d - 4, twisted=True)
    outer_hi = character_spectrum(hring, sigma, 3 * d - 4, twisted=True)
    outer_chars = set(outer_lo.histogram) | set(outer_hi.histogram)
    kept = []
    kept_strict = []
    for c in middle.characters():
        dim = middle.histogram[c]
        orbit = galois_orbit(c, sigma.modulus)
        if not orbit & outer_chars:
            kept.append((c, dim))
        if all(middle.histogram.get(u, 0) > 0 for u in orbit):
            kept_strict.append((c, dim))
    bound = 1 + sum(dim for _, dim in kept)
    strict_bound = 1 + sum(dim for _, dim in kept_strict)
    return PicardBoundResult(
        bound=bound,
        strict_bound=strict_bound,
        kept=kept,
        kept_strict=kept_strict,
        middle=middle,
        outer=(outer_lo, outer_hi),
        spectra_disjoint=not (set(middle.histogram) & outer_chars),
        multiplicity_free=all(v == 1 for v in middle.histogram.values()),
    )
