"""Graded quotients of a polynomial ring by a Jacobian ideal.

For a homogeneous form F of degree d in n variables, the quotient of the
polynomial ring by the ideal of first partials is graded Artinian exactly
when the projective hypersurface F = 0 is smooth, with one-dimensional
top piece in the socle degree n*(d-2).  This module computes graded
pieces, multiplication maps between them, and the socle pairing, always
with exact rational arithmetic for any claim about nonzero kernels or
dimensions.

Three elimination paths produce identical answers and are chosen per
ring:

* monomial ideals reduce to divisibility bookkeeping;
* rings with a declared diagonal symmetry split each graded piece into
  character blocks that are eliminated independently (each Jacobian
  generator is supported in a single block, so the span matrix is block
  diagonal and the ranks add);
* everything else runs fraction-free elimination, with an optional
  modular shortcut for large pieces that still certifies the exact rank
  (see ``_certified_ideal_rank``).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd

from . import exactla, modrank
from .poly import (PolyRing, SparsePoly, enumerate_monomials, grevlex_key,
                   monomial_divides, monomial_mul, partial_derivative)


class SocleNotOneDimensional(ArithmeticError):
    """The socle degree piece does not have dimension one."""


class IdealNotMonomial(ValueError):
    """An operation requiring a monomial Jacobian ideal got a general one."""


def _rref(rows, ncols):
    """Reduced row echelon form over the rationals.

    Returns (rref_rows, pivot_cols).  Input rows are consumed.
    """
    rows = [[Fraction(x) for x in row] for row in rows if any(row)]
    out = []
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], piv_cols


class HypersurfaceRing:
    """Jacobian quotient ring of a homogeneous form.

    Parameters
    ----------
    f : SparsePoly
        Homogeneous form in a plain rational ring (no algebraic
        generators); every ring variable is a coordinate.
    symmetry : (exponents, modulus) pair, optional
        Declares that f is an eigenvector of the diagonal automorphism
        x_i -> zeta**e_i x_i of the given order.  Used to split graded
        pieces into character blocks; validated on construction.
    """

    def __init__(self, f, symmetry=None):
        if f.ring.reductions:
            raise ValueError("hypersurface ring needs a plain rational ring")
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("defining form must be homogeneous and nonzero")
        self.poly = f
        self.ring = f.ring
        self.nvars = f.ring.nvars
        self.degree = f.total_degree()
        if self.degree < 2:
            raise ValueError("defining form must have degree at least 2")
        self.socle_degree = self.nvars * (self.degree - 2)
        den = 1
        for c in f.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        scaled = f.scale(den)
        self.partials = [partial_derivative(scaled, name)
                         for name in self.ring.names]
        self.symmetry = None
        self._char_of_partial = None
        if symmetry is not None:
            exponents, modulus = symmetry
            exponents = tuple(int(e) % int(modulus) for e in exponents)
            if len(exponents) != self.nvars:
                raise ValueError("one symmetry exponent per variable required")
            chars = {self._character(e, exponents, modulus) for e in f.terms}
            if len(chars) != 1:
                raise ValueError("defining form is not a symmetry eigenvector")
            self.symmetry = (exponents, int(modulus))
        self._pieces = {}
        self._dims = {}
        self._lock = threading.Lock()

    @staticmethod
    def _character(exps, exponents, modulus):
        return sum(a * b for a, b in zip(exps, exponents)) % modulus

    def character_of(self, exps):
        """Character of a monomial under the declared symmetry."""
        if self.symmetry is None:
            raise ValueError("ring has no declared symmetry")
        exponents, modulus = self.symmetry
        return self._character(exps, exponents, modulus)

    @property
    def is_monomial_ideal(self):
        return all(len(p.terms) <= 1 for p in self.partials)

    def monomial_generators(self):
        """Exponent tuples generating the ideal, for the monomial case."""
        if not self.is_monomial_ideal:
            raise IdealNotMonomial("Jacobian ideal has a non-monomial generator")
        gens = []
        for p in self.partials:
            for e in p.terms:
                gens.append(e)
        return gens

    def span_rows(self, k):
        """Integer generator rows of the degree-k Jacobian slice.

        Rows are indexed by (source monomial, partial) pairs in canonical
        order; columns by the canonical degree-k monomial list.
        """
        monos = enumerate_monomials(self.nvars, k)
        col = {m: j for j, m in enumerate(monos)}
        rows = []
        tags = []
        if k >= self.degree - 1:
            for m in enumerate_monomials(self.nvars, k - (self.degree - 1)):
                for i, p in enumerate(self.partials):
                    row = [0] * len(monos)
                    for e, c in p.terms.items():
                        row[col[monomial_mul(m, e)]] += int(c)
                    rows.append(row)
                    tags.append((m, i))
        return rows, monos, tags

    def _koszul_rows(self, k):
        """Relations among the generator rows coming from Koszul syzygies.

        Each row is the free-module vector of d_jF * e_i - d_iF * e_j
        times a monomial of degree k - 2(d-1), written in the same
        (source monomial, partial) coordinates as ``span_rows(k)``.
        These vectors lie in the kernel of the span map for every F.
        """
        e = self.degree - 1
        if k < 2 * e:
            return []
        src = enumerate_monomials(self.nvars, k - e)
        slot = {(m, i): i + self.nvars * j for j, m in enumerate(src)
                for i in range(self.nvars)}
        rows = []
        for mu in enumerate_monomials(self.nvars, k - 2 * e):
            for i in range(self.nvars):
                for j in range(i + 1, self.nvars):
                    row = [0] * (len(src) * self.nvars)
                    for ex, c in self.partials[j].terms.items():
                        row[slot[(monomial_mul(mu, ex), i)]] += int(c)
                    for ex, c in self.partials[i].terms.items():
                        row[slot[(monomial_mul(mu, ex), j)]] -= int(c)
                    rows.append(row)
        return rows

    def _certified_ideal_rank(self, k, primes=(1000003, 1000033, 1000099)):
        """Exact rank of the degree-k slice from modular elimination alone.

        The rank mod p is a lower bound for the exact rank.  Two upper
        bounds are a priori: min(rows, cols), and rows minus the rank of
        the Koszul relation rows, which always lie in the kernel of the
        span map.  Whenever the modular lower bound meets either upper
        bound the exact rank is certified; otherwise returns None and the
        caller falls back to fraction-free elimination.
        """
        rows, monos, _ = self.span_rows(k)
        if not rows:
            return 0
        nrows, ncols = len(rows), len(monos)
        koszul = None
        for p in primes:
            m1 = modrank.rank_mod(rows, p)
            if m1 == min(nrows, ncols):
                return m1
            if koszul is None:
                koszul = self._koszul_rows(k)
            if koszul:
                m2 = modrank.rank_mod(koszul, p)
                if m1 == nrows - m2:
                    return m1
        return None

    def ideal_rank(self, k, method="auto"):
        """Exact dimension of the degree-k piece of the Jacobian ideal."""
        if k < self.degree - 1:
            return 0
        if method == "auto" and self.is_monomial_ideal:
            gens = self.monomial_generators()
            monos = enumerate_monomials(self.nvars, k)
            return sum(1 for m in monos
                       if any(monomial_divides(g, m) for g in gens))
        if method == "auto" and self.symmetry is not None:
            blocks = self._symmetric_blocks(k)
            return sum(len(cols) - len(free)
                       for _, cols, free, _, _ in blocks)
        rows, monos, _ = self.span_rows(k)
        # entry growth in fraction-free elimination is driven by the step
        # count, so route long eliminations through the certificate first
        if method == "auto" and min(len(rows), len(monos)) > 48:
            certified = self._certified_ideal_rank(k)
            if certified is not None:
                return certified
        return exactla.rank(rows)

    def _symmetric_blocks(self, k, symmetry=None):
        """Character blocks of the degree-k slice, each exactly eliminated.

        Returns a list of (character, column_indices, free_local_indices,
        rref_rows, pivot_local_indices) sorted by character.  Every
        generator row must be supported inside a single block; this is
        rechecked here so an inconsistent symmetry hint cannot produce a
        wrong rank.
        """
        exponents, modulus = symmetry if symmetry is not None else self.symmetry
        monos = enumerate_monomials(self.nvars, k)
        by_char = {}
        for j, m in enumerate(monos):
            by_char.setdefault(self._character(m, exponents, modulus), []).append(j)
        rows, _, _ = self.span_rows(k)
        local = {}
        for c, js in by_char.items():
            local[c] = {j: t for t, j in enumerate(js)}
        rows_by_char = {c: [] for c in by_char}
        for row in rows:
            support = [j for j, x in enumerate(row) if x]
            if not support:
                continue
            chars = {self._character(monos[j], exponents, modulus)
                     for j in support}
            if len(chars) != 1:
                raise ValueError("generator spans several characters; "
                                 "symmetry declaration is inconsistent")
            c = chars.pop()
            rows_by_char[c].append([row[j] for j in by_char[c]])
        blocks = []
        for c in sorted(by_char):
            js = by_char[c]
            rref, piv = _rref(rows_by_char[c], len(js))
            free = [t for t in range(len(js)) if t not in piv]
            blocks.append((c, js, free, rref, piv))
        return blocks

    def piece(self, k):
        """Graded piece with representatives and a reduction map, memoised."""
        with self._lock:
            if k not in self._pieces:
                self._pieces[k] = GradedPiece(self, k)
            return self._pieces[k]

    def quotient_dim(self, k, method="auto"):
        """dim of the degree-k quotient piece; exact for every method."""
        if k < 0:
            return 0
        key = (k, method)
        with self._lock:
            if key in self._dims:
                return self._dims[key]
        monos = len(enumerate_monomials(self.nvars, k))
        dim = monos - self.ideal_rank(k, method=method)
        with self._lock:
            self._dims[key] = dim
        return dim


class GradedPiece:
    """One graded piece of the quotient: basis data plus reduction.

    Fields: ``degree``, ``monomials`` (canonical ambient basis),
    ``representatives`` (monomials whose classes form a quotient basis,
    the free columns of the eliminated ideal slice), ``dim``.
    """

    def __init__(self, hring, k):
        self.hring = hring
        self.degree = k
        self.monomials = enumerate_monomials(hring.nvars, k)
        self._col = {m: j for j, m in enumerate(self.monomials)}
        if k < hring.degree - 1:
            self._mode = "free"
            self.representatives = list(self.monomials)
        elif hring.is_monomial_ideal:
            self._mode = "monomial"
            gens = hring.monomial_generators()
            self.representatives = [m for m in self.monomials
                                    if not any(monomial_divides(g, m) for g in gens)]
        elif hring.symmetry is not None:
            self._mode = "blocks"
            self._blocks = hring._symmetric_blocks(k)
            reps = []
            self._block_of = {}
            for c, js, free, rref, piv in self._blocks:
                for t in free:
                    reps.append(self.monomials[js[t]])
            reps.sort(key=grevlex_key, reverse=True)
            self.representatives = reps
            for b, (c, js, free, rref, piv) in enumerate(self._blocks):
                for j in js:
                    self._block_of[j] = b
        else:
            self._mode = "rref"
            rows, _, _ = hring.span_rows(k)
            self._rref, self._piv = _rref(rows, len(self.monomials))
            free = [j for j in range(len(self.monomials)) if j not in self._piv]
            self.representatives = [self.monomials[j] for j in free]
        self.dim = len(self.representatives)
        self._rep_pos = {m: i for i, m in enumerate(self.representatives)}

    def ideal_matrix(self):
        """Integer generator rows of the ideal slice in ambient coordinates."""
        rows, _, _ = self.hring.span_rows(self.degree)
        return rows

    def reduce_vector(self, terms):
        """Quotient coordinates (over ``representatives``) of an ambient vector.

        ``terms`` maps degree-k exponent tuples to coefficients.
        """
        out = [Fraction(0)] * self.dim
        if self._mode == "free":
            for e, c in terms.items():
                out[self._rep_pos[e]] += c
            return out
        if self._mode == "monomial":
            for e, c in terms.items():
                pos = self._rep_pos.get(e)
                if pos is not None:
                    out[pos] += c
            return out
        if self._mode == "blocks":
            by_block = {}
            for e, c in terms.items():
                j = self._col[e]
                by_block.setdefault(self._block_of[j], {})[j] = c
            for b, sub in by_block.items():
                c, js, free, rref, piv = self._blocks[b]
                local = [Fraction(0)] * len(js)
                pos_in_block = {j: t for t, j in enumerate(js)}
                for j, coeff in sub.items():
                    local[pos_in_block[j]] += coeff
                for row, pc in zip(rref, piv):
                    f = local[pc]
                    if f:
                        local = [x - f * y for x, y in zip(local, row)]
                for t in free:
                    if local[t]:
                        out[self._rep_pos[self.monomials[js[t]]]] += local[t]
            return out
        vec = [Fraction(0)] * len(self.monomials)
        for e, c in terms.items():
            vec[self._col[e]] += c
        for row, pc in zip(self._rref, self._piv):
            f = vec[pc]
            if f:
                vec = [x - f * y for x, y in zip(vec, row)]
        for m in self.representatives:
            out[self._rep_pos[m]] = vec[self._col[m]]
        return out

    def reduce_poly(self, f):
        return self.reduce_vector(f.terms)

    def character_dimensions(self):
        """Mapping character -> eigenspace dimension (symmetric rings only)."""
        hring = self.hring
        if hring.symmetry is None:
            raise ValueError("ring has no declared symmetry")
        exponents, modulus = hring.symmetry
        dims = {}
        if self._mode == "blocks":
            for c, js, free, rref, piv in self._blocks:
                if free:
                    dims[c] = len(free)
            return dims
        for m in self.representatives:
            c = hring._character(m, exponents, modulus)
            dims[c] = dims.get(c, 0) + 1
        if self._mode not in ("free", "monomial"):
            raise ValueError("character split needs an equivariant basis")
        return dims


def hilbert_function(hring, through=None, method="auto"):
    """Exact dimensions of the graded quotient pieces 0..socle degree.

    ``through`` extends the table past the socle degree when given.
    """
    top = hring.socle_degree if through is None else through
    return [hring.quotient_dim(k, method=method) for k in range(top + 1)]


class SmoothnessResult:
    __slots__ = ("smooth", "mode", "checked_degree", "dimension")

    def __init__(self, smooth, mode, checked_degree, dimension):
        self.smooth = smooth
        self.mode = mode
        self.checked_degree = checked_degree
        self.dimension = dimension

    def __bool__(self):
        return self.smooth

    def __repr__(self):
        return (f"SmoothnessResult(smooth={self.smooth}, mode={self.mode!r}, "
                f"degree={self.checked_degree}, dim={self.dimension})")


def is_smooth_artinian(hring, prime=modrank.DEFAULT_PRIME, exact=False):
    """Smoothness of the hypersurface via vanishing above the socle.

    The quotient is Artinian with socle degree n*(d-2) exactly when the
    hypersurface is smooth, so it suffices that the piece in degree
    socle+1 vanishes.  That is a full-rank claim about the ideal slice,
    so a modular rank that meets the monomial count certifies it; when
    the modular rank falls short the exact elimination decides.
    """
    k = hring.socle_degree + 1
    monos = len(enumerate_monomials(hring.nvars, k))
    mode = "exact"
    if not exact and not hring.is_monomial_ideal and hring.symmetry is None:
        rows, _, _ = hring.span_rows(k)
        cert = exactla.modular_rank(rows, prime, upper_bound=monos)
        if cert.certified:
            return SmoothnessResult(True, f"modular(p={prime})", k, 0)
        mode = f"exact(after modular p={prime})"
    dim = hring.quotient_dim(k)
    return SmoothnessResult(dim == 0, mode, k, dim)


class MultiplicationMap:
    """Matrix of R_a (x) R_b -> R_c in quotient coordinates.

    Rows are indexed by the representatives of the target piece, columns
    by source pairs, left factor major.  With ``quotient_by`` the left
    factor runs over the given subspace vectors (coordinates over the
    representatives of R_a) instead of the full basis.
    """

    __slots__ = ("hring", "a", "b", "c", "matrix", "left_dim", "right_dim",
                 "quotient_by")

    def __init__(self, hring, a, b, quotient_by=None):
        self.hring = hring
        self.a = a
        self.b = b
        self.c = a + b
        pa, pb, pc = hring.piece(a), hring.piece(b), hring.piece(self.c)
        self.quotient_by = quotient_by
        if quotient_by is None:
            left = [{u: Fraction(1)} for u in pa.representatives]
        else:
            left = []
            for vec in quotient_by:
                if len(vec) != pa.dim:
                    raise ValueError("subspace vector length must match dim R_a")
                left.append({u: Fraction(x)
                             for u, x in zip(pa.representatives, vec) if x})
        self.left_dim = len(left)
        self.right_dim = pb.dim
        cols = []
        for uvec in left:
            for v in pb.representatives:
                prod = {}
                for u, cu in uvec.items():
                    e = monomial_mul(u, v)
                    prod[e] = prod.get(e, Fraction(0)) + cu
                cols.append(pc.reduce_vector(prod))
        self.matrix = [[cols[j][i] for j in range(len(cols))]
                       for i in range(pc.dim)]

    @property
    def target_dim(self):
        return len(self.matrix)

    @property
    def ncols(self):
        return self.left_dim * self.right_dim


def multiplication_map(hring, a, b, quotient_by=None):
    return MultiplicationMap(hring, a, b, quotient_by=quotient_by)


class SurjectivityResult:
    __slots__ = ("surjective", "rank", "target_dim", "mode")

    def __init__(self, surjective, rank, target_dim, mode):
        self.surjective = surjective
        self.rank = rank
        self.target_dim = target_dim
        self.mode = mode

    def __bool__(self):
        return self.surjective

    def __repr__(self):
        return (f"SurjectivityResult(surjective={self.surjective}, "
                f"rank={self.rank}, target_dim={self.target_dim}, mode={self.mode!r})")


def is_surjective(mmap, prime=None):
    """Surjectivity of a multiplication map.

    Full row rank is a claim a modular certificate can establish; when a
    prime is given and the certificate falls short, exact elimination
    settles the answer.
    """
    target = mmap.target_dim
    if target == 0:
        return SurjectivityResult(True, 0, 0, "trivial")
    if prime is not None:
        cert = exactla.modular_rank(mmap.matrix, prime, upper_bound=target)
        if cert.certified:
            return SurjectivityResult(True, cert.rank, target,
                                      f"modular(p={prime})")
    r = exactla.rank(mmap.matrix)
    return SurjectivityResult(r == target, r, target, "exact")


def left_kernel(mmap):
    """Exact basis of {u : u * v == 0 for every v}, brute force.

    Stacks the conditions for all right basis vectors and coordinates of
    the target, then takes the exact kernel.
    """
    rows = []
    for v in range(mmap.right_dim):
        for i in range(mmap.target_dim):
            rows.append([mmap.matrix[i][u * mmap.right_dim + v]
                         for u in range(mmap.left_dim)])
    if not rows:
        return []
    return exactla.kernel_basis(rows)


class PairingResult:
    __slots__ = ("nondegenerate", "k", "dim_left", "dim_right", "rank", "mode")

    def __init__(self, nondegenerate, k, dim_left, dim_right, rank, mode):
        self.nondegenerate = nondegenerate
        self.k = k
        self.dim_left = dim_left
        self.dim_right = dim_right
        self.rank = rank
        self.mode = mode

    def __bool__(self):
        return self.nondegenerate

    def __repr__(self):
        return (f"PairingResult(nondegenerate={self.nondegenerate}, k={self.k}, "
                f"dims=({self.dim_left}, {self.dim_right}), rank={self.rank}, "
                f"mode={self.mode!r})")


def macaulay_pairing_check(hring, k, prime=None):
    """Nondegeneracy of the socle pairing R_k x R_(sigma-k) -> R_sigma.

    Requires the socle piece to be one-dimensional; raises
    SocleNotOneDimensional otherwise.
    """
    sigma = hring.socle_degree
    top = hring.piece(sigma)
    if top.dim != 1:
        raise SocleNotOneDimensional(
            f"dim R_{sigma} = {top.dim}, expected 1")
    pa, pb = hring.piece(k), hring.piece(sigma - k)
    matrix = []
    for u in pa.representatives:
        row = []
        for v in pb.representatives:
            coords = top.reduce_vector({monomial_mul(u, v): Fraction(1)})
            row.append(coords[0])
        matrix.append(row)
    if pa.dim != pb.dim:
        return PairingResult(False, k, pa.dim, pb.dim, None, "dimension mismatch")
    if pa.dim == 0:
        return PairingResult(True, k, 0, 0, 0, "trivial")
    if prime is not None:
        cert = exactla.modular_rank(matrix, prime, upper_bound=pa.dim)
        if cert.certified:
            return PairingResult(True, k, pa.dim, pb.dim, cert.rank,
                                 f"modular(p={prime})")
    r = exactla.rank(matrix)
    return PairingResult(r == pa.dim, k, pa.dim, pb.dim, r, "exact")


class DualityKernelResult:
    """Left kernel emptiness established through the socle pairing.

    If R_(sigma-a-b) (x) R_b -> R_(sigma-a) is surjective and the socle
    pairing at degree a is nondegenerate, then u * R_b = 0 forces u to
    pair to zero with all of R_(sigma-a), hence u = 0.  Both sub-verdicts
    are kept.
    """

    __slots__ = ("empty", "surjectivity", "pairing", "a", "b")

    def __init__(self, a, b, surjectivity, pairing):
        self.a = a
        self.b = b
        self.surjectivity = surjectivity
        self.pairing = pairing
        self.empty = bool(surjectivity) and bool(pairing)

    def __bool__(self):
        return self.empty

    def __repr__(self):
        return (f"DualityKernelResult(empty={self.empty}, a={self.a}, "
                f"b={self.b}, surjectivity={self.surjectivity!r}, "
                f"pairing={self.pairing!r})")


def left_kernel_via_duality(hring, a, b, prime=None):
    sigma = hring.socle_degree
    if a + b > sigma:
        raise ValueError("need a + b <= socle degree for the duality route")
    mmap = multiplication_map(hring, sigma - a - b, b)
    surj = is_surjective(mmap, prime=prime)
    pairing = macaulay_pairing_check(hring, a, prime=prime)
    return DualityKernelResult(a, b, surj, pairing)


class UniformBoundResult:
    __slots__ = ("bound", "degree", "per_variable")

    def __init__(self, bound, degree, per_variable):
        self.bound = bound
        self.degree = degree
        self.per_variable = per_variable

    def __repr__(self):
        return (f"UniformBoundResult(bound={self.bound}, degree={self.degree}, "
                f"per_variable={self.per_variable})")


def uniform_mult_rank_bound(hring, b):
    """Uniform lower bound on rank of multiplication by any nonzero linear form.

    Only valid for monomial Jacobian ideals.  For a linear form L pick
    its earliest variable x_i in the canonical order; for each standard
    monomial m of degree b with x_i * m standard, the grevlex leading
    monomial of L * m is x_i * m, and distinct m give distinct leading
    monomials that survive reduction by the monomial ideal.  Hence
    rank(mult by L) >= #{m standard : x_i * m standard}, and the minimum
    over i bounds every L at once.
    """
    if not hring.is_monomial_ideal:
        raise IdealNotMonomial("uniform bound requires a monomial Jacobian ideal")
    gens = hring.monomial_generators()
    std = [m for m in enumerate_monomials(hring.nvars, b)
           if not any(monomial_divides(g, m) for g in gens)]
    per_variable = []
    for i in range(hring.nvars):
        count = 0
        for m in std:
            shifted = list(m)
            shifted[i] += 1
            if not any(monomial_divides(g, tuple(shifted)) for g in gens):
                count += 1
        per_variable.append(count)
    return UniformBoundResult(min(per_variable), b, per_variable)


class FunctionalMapResult:
    __slots__ = ("rank", "target_dim", "subspace_dim", "surjective", "g_class_nonzero")

    def __init__(self, rank, target_dim, subspace_dim, g_class_nonzero):
        self.rank = rank
        self.target_dim = target_dim
        self.subspace_dim = subspace_dim
        self.surjective = rank == target_dim
        self.g_class_nonzero = g_class_nonzero

    def __repr__(self):
        return (f"FunctionalMapResult(rank={self.rank}, target_dim={self.target_dim}, "
                f"subspace_dim={self.subspace_dim}, surjective={self.surjective})")


def functional_kernel_map(hring, g, b=None):
    """Rank of W (x) R_b -> R_(a+b) for W the socle-orthogonal of g.

    Here a = deg g, W = {h in R_a : the socle coordinate of h * g is 0},
    the kernel of the linear functional that pairs against g; it contains
    the ideal slice by construction, so W presents a subspace of R_a of
    codimension one whenever the class of g is nonzero.
    """
    a = g.total_degree()
    if b is None:
        b = hring.degree - 1
    sigma = hring.socle_degree
    top = hring.piece(sigma)
    if top.dim != 1:
        raise SocleNotOneDimensional(f"dim R_{sigma} = {top.dim}, expected 1")
    pa = hring.piece(a)
    functional = []
    for u in pa.representatives:
        prod = {}
        for e, c in g.terms.items():
            m = monomial_mul(u, e)
            prod[m] = prod.get(m, Fraction(0)) + c
        functional.append(top.reduce_vector(prod)[0])
    g_nonzero = any(functional)
    kernel = exactla.kernel_basis([functional]) if g_nonzero else [
        [Fraction(1) if i == j else Fraction(0) for j in range(pa.dim)]
        for i in range(pa.dim)]
    mmap = multiplication_map(hring, a, b, quotient_by=kernel)
    r = exactla.rank(mmap.matrix)
    return FunctionalMapResult(r, mmap.target_dim, len(kernel), g_nonzero)
