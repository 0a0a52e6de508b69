// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/floer.hpp"

#include <algorithm>
#include <set>

#include "floer_rings/exterior.hpp"

namespace fr {

namespace {

long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SuperPolynomial series_poly(const RingPtr& ring, const TruncatedSeries& s) {
  SuperPolynomial p(ring);
  const int t = ring->find_even("t");
  for (int i = 0; i < s.order(); ++i) {
    if (s[i].is_zero()) continue;
    Monomial m;
    if (i > 0) {
      if (t < 0) continue;
      m.e[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(i);
    }
    p.add_term(m, s[i]);
  }
  return p;
}

SuperPolynomial cst(const RingPtr& ring, const Scalar& c) { return SuperPolynomial::constant(ring, c); }

void check_genus_range(int g) {
  if (g < 1 || g > kMaxGenus) fail(ErrorCode::OutOfRange, "genus must lie in 1.." + std::to_string(kMaxGenus));
}

Json scalar_json(const Scalar& s) { return s.to_string(); }

Json series_json(const TruncatedSeries& s) {
  Json j = Json::array();
  for (const auto& x : s.to_strings()) j.push_back(x);
  return j;
}

std::string bg_monomial(int i, int j) {
  std::string s;
  if (i > 0) s += i == 1 ? "betabar" : "betabar^" + std::to_string(i);
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += j == 1 ? "gamma" : "gamma^" + std::to_string(j);
  }
  return s.empty() ? "1" : s;
}

Vector apply_n(const SparseMatrix& m, Vector v, int n) {
  for (int i = 0; i < n; ++i) v = m.apply(v);
  return v;
}

Vector betabar_apply(const QuotientAlgebra& q, const Scalar& shift, const Vector& v) {
  Vector out = q.operator_of("beta").apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[i] += shift * v[i];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PerturbationProfile PerturbationProfile::zero_series(int order) {
  if (order < 1) fail(ErrorCode::OutOfRange, "truncation order must be positive");
  PerturbationProfile p;
  p.order = order;
  return p;
}

PerturbationProfile PerturbationProfile::from_seed(std::uint64_t seed, int order) {
  PerturbationProfile p = zero_series(order);
  p.random = true;
  p.seed = seed;
  return p;
}

TruncatedSeries PerturbationProfile::f(int i, int j, int r, int g, bool bar) const {
  const int n = std::max(order, 1);
  std::vector<Scalar> c(static_cast<std::size_t>(n));
  if (random) {
    for (int s = 1; s < n; ++s) {
      std::uint64_t h = hash_words({seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j),
                                    static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(g),
                                    static_cast<std::uint64_t>(bar ? 1 : 0), static_cast<std::uint64_t>(s)});
      const long long num = static_cast<long long>(h % 5) - 2;
      const long long den = static_cast<long long>((h >> 32) % 3) + 1;
      c[static_cast<std::size_t>(s)] = Scalar(Rational(num, den));
    }
  }
  return TruncatedSeries(std::move(c), n);
}

Json PerturbationProfile::to_json() const {
  Json j;
  j["order"] = order;
  j["kind"] = order == 0 ? "t=0" : (random ? "random" : "zero");
  if (random) j["seed"] = seed;
  return j;
}

std::vector<PerturbationProfile> random_profiles(std::uint64_t seed, int count, int order) {
  SplitMix64 rng(seed);
  std::vector<PerturbationProfile> out;
  for (int i = 0; i < count; ++i) out.push_back(PerturbationProfile::from_seed(rng.next(), order));
  return out;
}

RingPtr floer_ring(int order) {
  std::vector<EvenVariable> v{{"alpha", 1, 0}, {"beta", 1, 0}, {"gamma", 1, 0}};
  if (order > 0) v.push_back({"t", 0, order});
  return PolyRing::make(v);
}

RingPtr floer_bar_ring(int order) {
  std::vector<EvenVariable> v{{"alpha", 1, 0}, {"beta", 1, 0}};
  if (order > 0) v.push_back({"t", 0, order});
  return PolyRing::make(v);
}

std::vector<RelationTriple> build_relations(int g, int up_to, const PerturbationProfile& p) {
  check_genus_range(g);
  if (up_to < 0 || up_to > g) fail(ErrorCode::OutOfRange, "relation index must lie in 0..g");
  RingPtr R = floer_ring(p.order);
  auto a = SuperPolynomial::variable(R, "alpha");
  auto b = SuperPolynomial::variable(R, "beta");
  auto c = SuperPolynomial::variable(R, "gamma");
  std::vector<RelationTriple> out;
  out.push_back({cst(R, Scalar(1)), SuperPolynomial(R), SuperPolynomial(R)});
  for (int r = 0; r < up_to; ++r) {
    const auto& prev = out.back();
    auto f = [&](int i, int j) { return series_poly(R, p.f(i, j, r, g, false)); };
    const Scalar sign8(r % 2 == 0 ? -8 : 8);  // (-1)^{r+1} 8
    RelationTriple next{
        (a + f(1, 1)) * prev.r1 + Scalar(r * r) * (cst(R, Scalar(1)) + f(1, 2)) * prev.r2 + f(1, 3) * prev.r3,
        (b + cst(R, sign8) + f(2, 1)) * prev.r1 + f(2, 2) * prev.r2 +
            (cst(R, Scalar(Rational(2 * r, r + 1))) + f(2, 3)) * prev.r3,
        c * prev.r1};
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<RelationPair> build_bar_relations(int g, int up_to, const PerturbationProfile& p) {
  check_genus_range(g);
  if (up_to < 0 || up_to > g) fail(ErrorCode::OutOfRange, "relation index must lie in 0..g");
  RingPtr R = floer_bar_ring(p.order);
  auto a = SuperPolynomial::variable(R, "alpha");
  auto b = SuperPolynomial::variable(R, "beta");
  std::vector<RelationPair> out;
  out.push_back({cst(R, Scalar(1)), SuperPolynomial(R)});
  for (int r = 0; r < up_to; ++r) {
    const auto& prev = out.back();
    auto f = [&](int i, int j) { return series_poly(R, p.f(i, j, r, g, true)); };
    const Scalar sign8(r % 2 == 0 ? -8 : 8);
    // f-bar_22 enters both rows.
    RelationPair next{(a + f(1, 2)) * prev.r1 + Scalar(r * r) * (cst(R, Scalar(1)) + f(2, 2)) * prev.r2,
                      (b + cst(R, sign8) + f(2, 1)) * prev.r1 + f(2, 2) * prev.r2};
    out.push_back(std::move(next));
  }
  return out;
}

QuotientAlgebra build_T(int g, int k, const PerturbationProfile& p) {
  check_genus_range(g);
  if (k < 0 || k > g - 1) fail(ErrorCode::OutOfRange, "k must lie in 0..g-1");
  const int n = g - k;
  auto rel = build_relations(g, n, p);
  IdealPresentation I{floer_ring(p.order), {rel[static_cast<std::size_t>(n)].r1, rel[static_cast<std::size_t>(n)].r2,
                                            rel[static_cast<std::size_t>(n)].r3},
                      4 * n + 8, n};
  return quotient_basis(I);
}

QuotientAlgebra build_Tbar(int g, int k, const PerturbationProfile& p) {
  check_genus_range(g);
  if (k < 0 || k > g - 1) fail(ErrorCode::OutOfRange, "k must lie in 0..g-1");
  const int n = g - k;
  auto rel = build_bar_relations(g, n, p);
  IdealPresentation I{floer_bar_ring(p.order),
                      {rel[static_cast<std::size_t>(n)].r1, rel[static_cast<std::size_t>(n)].r2}, 4 * n + 8, n};
  return quotient_basis(I);
}

FloerRing build_floer(int g, const PerturbationProfile& p) {
  check_genus_range(g);
  FloerRing f;
  f.genus = g;
  f.profile = p;
  f.t.resize(static_cast<std::size_t>(g));
  f.tbar.resize(static_cast<std::size_t>(g));
  parallel_for(static_cast<std::size_t>(2 * g), [&](std::size_t i) {
    const int k = static_cast<int>(i / 2);
    if (i % 2 == 0) {
      f.t[static_cast<std::size_t>(k)] = build_T(g, k, p);
    } else {
      f.tbar[static_cast<std::size_t>(k)] = build_Tbar(g, k, p);
    }
  });
  for (int k = 0; k < g; ++k) f.primitive_dims.push_back(static_cast<int>(primitive_basis(g, k).size()));
  return f;
}

int label_from_eigenvalues(const Scalar& alpha, const Scalar& beta) {
  auto bad = [&] {
    fail(ErrorCode::EigenvalueCollision,
         "eigenvalue pair (" + alpha.to_string() + ", " + beta.to_string() + ") fits no label");
  };
  Rational x;
  bool odd;
  if (alpha.is_zero()) {
    x = Rational(0);
    odd = false;
  } else if (alpha.is_real()) {
    x = alpha.re() / Rational(4);
    odd = true;
  } else if (alpha.is_imaginary()) {
    x = alpha.im() / Rational(4);
    odd = false;
  } else {
    bad();
  }
  if (!x.is_integer()) bad();
  const long long r = x.to_int();
  if ((r % 2 != 0) != odd) bad();
  if (beta != Scalar(odd ? -8 : 8)) bad();
  return static_cast<int>(r);
}

Scalar betabar_shift(int r) { return Scalar(r % 2 == 0 ? -8 : 8); }

const FloerPiece* ArtinianAtlas::find(int k, int r, bool bar) const {
  for (const auto& p : bar ? bar_pieces : pieces) {
    if (p.k == k && p.r == r) return &p;
  }
  return nullptr;
}

ArtinianAtlas split_atlas(std::shared_ptr<const FloerRing> ring) {
  ArtinianAtlas atlas;
  atlas.ring = ring;
  const int g = ring->genus;
  std::vector<std::vector<FloerPiece>> parts(static_cast<std::size_t>(2 * g));
  parallel_for(static_cast<std::size_t>(2 * g), [&](std::size_t idx) {
    const int k = static_cast<int>(idx / 2);
    const bool bar = idx % 2 == 1;
    const QuotientAlgebra& q = bar ? ring->tbar[static_cast<std::size_t>(k)] : ring->t[static_cast<std::size_t>(k)];
    for (auto& lp : artinian_split(q, "alpha")) {
      FloerPiece fp;
      fp.k = k;
      fp.r = label_from_eigenvalues(lp.eigenvalue, lp.constant_terms.at("beta"));
      if (!bar && !lp.constant_terms.at("gamma").is_zero()) {
        fail(ErrorCode::EigenvalueCollision, "gamma is not nilpotent on a piece");
      }
      fp.gbar = g - k - std::abs(fp.r);
      fp.local = std::move(lp);
      parts[idx].push_back(std::move(fp));
    }
  });
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    auto& dst = idx % 2 == 1 ? atlas.bar_pieces : atlas.pieces;
    for (auto& p : parts[idx]) dst.push_back(std::move(p));
  }
  auto by_kr = [](const FloerPiece& a, const FloerPiece& b) { return std::pair(a.k, a.r) < std::pair(b.k, b.r); };
  std::sort(atlas.pieces.begin(), atlas.pieces.end(), by_kr);
  std::sort(atlas.bar_pieces.begin(), atlas.bar_pieces.end(), by_kr);
  return atlas;
}

std::optional<Vector> PieceCoordinates::coordinates(const Vector& v) const { return solve(basis, v); }

Vector piece_monomial(const ArtinianAtlas& atlas, const FloerPiece& piece, int a, int i) {
  const QuotientAlgebra& q = atlas.ring->t[static_cast<std::size_t>(piece.k)];
  Vector v = apply_n(q.operator_of("gamma"), piece.local.idempotent, i);
  const Scalar shift = betabar_shift(piece.r);
  for (int s = 0; s < a; ++s) v = betabar_apply(q, shift, v);
  return v;
}

PieceCoordinates piece_coordinates(const ArtinianAtlas& atlas, const FloerPiece& piece) {
  const QuotientAlgebra& q = atlas.ring->t[static_cast<std::size_t>(piece.k)];
  PieceCoordinates pc;
  pc.order = std::max(atlas.ring->profile.order, 1);
  const bool series = atlas.ring->profile.has_series();
  std::vector<Vector> cols;
  for (int j = 0; j < piece.gbar; ++j) {
    for (int i = 0; 2 * i + j < piece.gbar; ++i) {
      pc.monomials.emplace_back(i, j);
      Vector v = piece_monomial(atlas, piece, i, j);
      for (int s = 0; s < pc.order; ++s) {
        cols.push_back(v);
        if (series) v = q.operator_of("t").apply(v);
      }
    }
  }
  pc.basis = Matrix::from_columns(cols, q.dim());
  pc.is_basis = static_cast<int>(cols.size()) == piece.local.dim && span_dim(pc.basis) == piece.local.dim;
  return pc;
}

PieceRelation piece_relation(const ArtinianAtlas& atlas, const FloerPiece& piece) {
  PieceRelation rel;
  const int N = std::max(atlas.ring->profile.order, 1);
  rel.d = (piece.gbar - 1) / 2;
  PieceCoordinates pc = piece_coordinates(atlas, piece);
  if (!pc.is_basis) fail(ErrorCode::StructureMismatch, "beta-bar^i gamma^j e is not a basis of the piece");
  auto x = pc.coordinates(piece_monomial(atlas, piece, rel.d + 1, 0));
  if (!x) fail(ErrorCode::StructureMismatch, "beta-bar^{d+1} e lies outside the piece");
  rel.p.assign(static_cast<std::size_t>(rel.d + 2), TruncatedSeries(N));
  rel.p.back() = TruncatedSeries::constant(Scalar(1), N);
  for (std::size_t b = 0; b < pc.monomials.size(); ++b) {
    std::vector<Scalar> c(static_cast<std::size_t>(N));
    for (int s = 0; s < N; ++s) c[static_cast<std::size_t>(s)] = (*x)[b * static_cast<std::size_t>(N) + static_cast<std::size_t>(s)];
    TruncatedSeries ser(std::move(c), N);
    const auto [i, j] = pc.monomials[b];
    if (j == 0) {
      if (i > rel.d) fail(ErrorCode::Internal, "unexpected basis monomial");
      rel.p[static_cast<std::size_t>(i)] = -ser;
    } else if (!ser.is_zero()) {
      rel.c.emplace(std::pair(i, j), ser);
    }
  }
  rel.e = 0;
  while (rel.p[static_cast<std::size_t>(rel.e)].is_zero()) ++rel.e;
  return rel;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> check_ranks(const FloerRing& f) {
  std::vector<CheckResult> out;
  const int g = f.genus;
  const int N = std::max(f.profile.order, 1);
  for (int k = 0; k < g; ++k) {
    const int n = g - k;
    for (int bar = 0; bar < 2; ++bar) {
      const QuotientAlgebra& q = bar ? f.tbar[static_cast<std::size_t>(k)] : f.t[static_cast<std::size_t>(k)];
      const RingPtr& ring = q.ring();
      const int tvar = ring->find_even("t");
      const int nv = bar ? 2 : 3;
      std::set<std::uint64_t> expected;
      for (int a = 0; a < n; ++a)
        for (int b = 0; a + b < n; ++b)
          for (int c = 0; a + b + c < n; ++c) {
            if (bar && c > 0) break;
            for (int s = 0; s < N; ++s) {
              Monomial m;
              m.e[0] = static_cast<std::uint8_t>(a);
              m.e[1] = static_cast<std::uint8_t>(b);
              if (nv == 3) m.e[2] = static_cast<std::uint8_t>(c);
              if (tvar >= 0) m.e[static_cast<std::size_t>(tvar)] = static_cast<std::uint8_t>(s);
              expected.insert(m.key());
            }
          }
      std::set<std::uint64_t> got;
      for (const auto& m : q.basis()) got.insert(m.key());
      const long long want_rank = bar ? binom(n + 1, 2) : binom(n + 2, 3);
      const bool ok = got == expected && q.dim() == want_rank * N;
      Json data{{"genus", g}, {"k", k}, {"ring", bar ? "Tbar" : "T"}, {"rank", q.dim() / N},
                {"expected", want_rank}, {"profile", f.profile.to_json()}};
      Json witness;
      if (!ok) {
        Json extra = Json::array();
        for (auto key : got)
          if (!expected.count(key)) extra.push_back(monomial_to_string(*ring, Monomial::from_key(key)));
        witness = {{"unexpectedBasis", extra}, {"dim", q.dim()}};
      }
      out.push_back(make_check(bar ? "rank.Tbar" : "rank.T", ok, data, witness));
    }
  }
  return out;
}

std::vector<CheckResult> check_eigenvalues(const ArtinianAtlas& a) {
  const int g = a.ring->genus;
  std::set<std::pair<Scalar, Scalar>> got;
  std::set<std::pair<Scalar, Scalar>> expected;
  Json table = Json::array();
  for (const auto& p : a.bar_pieces) {
    if (p.k != 0) continue;
    const Scalar beta = p.local.constant_terms.at("beta");
    got.emplace(p.local.eigenvalue, beta);
    table.push_back({{"r", p.r}, {"alpha", scalar_json(p.local.eigenvalue)}, {"beta", scalar_json(beta)}});
  }
  for (int r = -(g - 1); r <= g - 1; ++r) {
    if (r % 2 != 0) {
      expected.emplace(Scalar(4 * r), Scalar(-8));
    } else {
      expected.emplace(Scalar(Rational(0), Rational(4 * r)), Scalar(8));
    }
  }
  const bool ok = got == expected;
  return {make_check("eigenvalues.Tbar", ok,
                     {{"genus", g}, {"pieces", table}, {"profile", a.ring->profile.to_json()}},
                     {{"expectedCount", expected.size()}, {"foundCount", got.size()}})};
}

std::vector<CheckResult> check_fin_ranks(const ArtinianAtlas& a) {
  std::vector<CheckResult> out;
  const int g = a.ring->genus;
  for (int k = 0; k < g; ++k) {
    Json ranks = Json::array();
    bool ok = true;
    for (int r = -(g - k - 1); r <= g - k - 1; ++r) {
      const FloerPiece* p = a.find(k, r, true);
      const int want = (g - k - 1 - std::abs(r)) / 2 + 1;
      const int rank = p ? p->local.rank : 0;
      if (rank != want) ok = false;
      ranks.push_back({{"r", r}, {"rank", rank}, {"expected", want}});
    }
    int count = 0;
    for (const auto& p : a.bar_pieces) count += p.k == k;
    if (count != 2 * (g - k) - 1) ok = false;
    out.push_back(make_check("fin.ranks", ok, {{"genus", g}, {"k", k}, {"ranks", ranks}, {"profile", a.ring->profile.to_json()}},
                             {{"pieceCount", count}}));
  }
  return out;
}

std::vector<CheckResult> verify_gr_structure(const ArtinianAtlas& a) {
  std::vector<CheckResult> out;
  const FloerRing& f = *a.ring;
  const int g = f.genus;
  const int N = std::max(f.profile.order, 1);
  const bool series = f.profile.has_series();
  for (const auto& p : a.pieces) {
    const QuotientAlgebra& q = f.t[static_cast<std::size_t>(p.k)];
    const SparseMatrix& gam = q.operator_of("gamma");
    const SparseMatrix& bet = q.operator_of("beta");
    LinearOp fop = as_op(gam);
    LinearOp bop = shifted(bet, betabar_shift(p.r));
    LinearOp top;
    if (series) top = as_op(q.operator_of("t"));
    std::vector<Matrix> levels = filtration_levels(fop, p.local.basis);
    bool ok = static_cast<int>(levels.size()) == p.gbar;
    Json slices = Json::array();
    Json witness = nullptr;
    for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
      const Matrix& upper = levels[static_cast<std::size_t>(i)];
      const Matrix lower = i + 1 < static_cast<int>(levels.size()) ? levels[static_cast<std::size_t>(i) + 1] : Matrix(upper.rows(), 0);
      const int want = (p.gbar - i - 1) / 2 + 1;
      const int sdim = upper.cols() - lower.cols();
      Matrix lower_t = lower;
      if (series) lower_t = column_basis(hstack(Matrix(upper.rows(), 0), hstack(lower, image_of(top, upper))));
      const int nil = relative_nilpotency(bop, upper, lower_t);
      const Vector gen = apply_n(gam, p.local.idempotent, i);
      const bool cyc = cyclic_modulo(bop, series ? &top : nullptr, gen, upper, lower);
      const bool slice_ok = sdim == want * N && nil == want && cyc;
      if (!slice_ok && witness.is_null()) witness = {{"k", p.k}, {"r", p.r}, {"i", i}, {"rank", sdim / N}, {"index", nil}, {"cyclic", cyc}};
      ok = ok && slice_ok;
      slices.push_back({{"i", i}, {"rank", sdim / N}, {"index", nil}, {"expected", want}});
    }
    if (!ok && witness.is_null()) witness = {{"k", p.k}, {"r", p.r}, {"levels", levels.size()}};
    out.push_back(make_check("gr.piece", ok,
                             {{"genus", g}, {"k", p.k}, {"r", p.r}, {"slices", slices}, {"profile", f.profile.to_json()}},
                             witness));
  }
  // Slice ranks and monomial bases of Gr_gamma T_{g,k}.
  for (int k = 0; k < g; ++k) {
    const QuotientAlgebra& q = f.t[static_cast<std::size_t>(k)];
    const int n = g - k;
    const SparseMatrix& gam = q.operator_of("gamma");
    std::vector<Matrix> levels = filtration_levels(as_op(gam), Matrix::identity(q.dim()));
    bool ok = static_cast<int>(levels.size()) == n;
    Json ranks = Json::array();
    Json witness = nullptr;
    for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
      const Matrix& upper = levels[static_cast<std::size_t>(i)];
      const Matrix lower = i + 1 < static_cast<int>(levels.size()) ? levels[static_cast<std::size_t>(i) + 1] : Matrix(upper.rows(), 0);
      const long long want = binom(n - i + 1, 2);
      const int sdim = upper.cols() - lower.cols();
      std::vector<Vector> mons;
      for (int aa = 0; aa < n - i; ++aa)
        for (int bb = 0; aa + bb < n - i; ++bb) {
          Monomial m;
          m.e[0] = static_cast<std::uint8_t>(aa);
          m.e[1] = static_cast<std::uint8_t>(bb);
          m.e[2] = static_cast<std::uint8_t>(i);
          Vector v = q.apply_monomial(m, q.one());
          for (int s = 0; s < N; ++s) {
            mons.push_back(v);
            if (series) v = q.operator_of("t").apply(v);
          }
        }
      const bool indep = span_dim(hstack(lower, Matrix::from_columns(mons, q.dim()))) == upper.cols() &&
                         static_cast<long long>(mons.size()) == want * N;
      const bool slice_ok = sdim == want * N && indep;
      if (!slice_ok && witness.is_null()) witness = {{"k", k}, {"i", i}, {"rank", sdim / N}, {"independent", indep}};
      ok = ok && slice_ok;
      ranks.push_back(sdim / N);
    }
    out.push_back(make_check("gr.slices", ok, {{"genus", g}, {"k", k}, {"sliceRanks", ranks}, {"profile", f.profile.to_json()}},
                             witness));
  }
  return out;
}

std::vector<CheckResult> check_gamma_inclusion(const FloerRing& f) {
  std::vector<CheckResult> out;
  const int g = f.genus;
  auto rel = build_relations(g, g, f.profile);
  for (int k = 0; k < g; ++k) {
    const int n = g - k;
    const QuotientAlgebra& q = f.t[static_cast<std::size_t>(k)];
    auto gam = SuperPolynomial::variable(q.ring(), "gamma");
    bool ok = true;
    Json witness = nullptr;
    for (int i = 1; i < n && ok; ++i) {
      const auto& R = rel[static_cast<std::size_t>(n - i)];
      const SuperPolynomial* parts[3] = {&R.r1, &R.r2, &R.r3};
      for (int j = 0; j < 3; ++j) {
        if (!is_zero_vector(q.normal_form(gam.pow(i) * *parts[j]))) {
          ok = false;
          witness = {{"k", k}, {"i", i}, {"relation", j + 1}};
          break;
        }
      }
    }
    out.push_back(make_check("gamma.inclusion", ok, {{"genus", g}, {"k", k}, {"profile", f.profile.to_json()}}, witness));
  }
  return out;
}

std::vector<CheckResult> verify_rewriting_degrees(const ArtinianAtlas& a) {
  std::vector<CheckResult> out;
  const FloerRing& f = *a.ring;
  const int g = f.genus;
  const bool series = f.profile.has_series();
  for (const auto& p : a.pieces) {
    Json witness = nullptr;
    bool ok = true;
    PieceCoordinates pc = piece_coordinates(a, p);
    if (!pc.is_basis) {
      out.push_back(make_check(series ? "rewrite.ee" : "rewrite.de", false, {{"genus", g}, {"k", p.k}, {"r", p.r}},
                               {{"reason", "monomials do not form a basis"}}));
      continue;
    }
    if (!series) {
      // d(e) support pattern and nilpotency of high monomials.
      for (int n = 0; n <= p.gbar && ok; ++n) {
        for (int m = 0; m <= p.gbar && ok; ++m) {
          if (2 * n + m < p.gbar) continue;
          Vector w = piece_monomial(a, p, n, m);
          auto x = pc.coordinates(w);
          if (!x) {
            ok = false;
            witness = {{"k", p.k}, {"r", p.r}, {"monomial", bg_monomial(n, m)}, {"reason", "outside piece"}};
            break;
          }
          for (std::size_t b = 0; b < pc.monomials.size(); ++b) {
            if ((*x)[b].is_zero()) continue;
            const auto [i, j] = pc.monomials[b];
            if (i + j < n + m || j < m || n + m >= p.gbar) {
              ok = false;
              witness = {{"k", p.k}, {"r", p.r}, {"monomial", bg_monomial(n, m)}, {"support", bg_monomial(i, j)}};
              break;
            }
          }
        }
      }
      out.push_back(make_check("rewrite.de", ok, {{"genus", g}, {"k", p.k}, {"r", p.r}, {"gbar", p.gbar}}, witness));
      continue;
    }
    PieceRelation rel = piece_relation(a, p);
    bool p0 = true;
    for (int i = 0; i <= rel.d; ++i) p0 = p0 && rel.p[static_cast<std::size_t>(i)].constant_term().is_zero();
    for (const auto& [ij, c] : rel.c) {
      if (ij.first + ij.second < rel.e) {
        ok = false;
        witness = {{"k", p.k}, {"r", p.r}, {"term", bg_monomial(ij.first, ij.second)}, {"e", rel.e}, {"coefficient", series_json(c)}};
        break;
      }
    }
    if (!p0) {
      ok = false;
      if (witness.is_null()) witness = {{"k", p.k}, {"r", p.r}, {"reason", "P_{d+1,0} differs from betabar^{d+1}"}};
    }
    out.push_back(make_check("rewrite.ee", ok,
                             {{"genus", g}, {"k", p.k}, {"r", p.r}, {"d", rel.d}, {"e", rel.e}, {"profile", f.profile.to_json()}},
                             witness));
  }
  return out;
}

std::vector<CheckResult> check_hf_presentation(const ArtinianAtlas& a) {
  std::vector<CheckResult> out;
  const FloerRing& f = *a.ring;
  const int g = f.genus;
  if (f.profile.has_series()) fail(ErrorCode::InvalidArgument, "presentation check runs at t = 0");
  RingPtr R = PolyRing::make({{"betabar", 2, 0}, {"gamma", 1, 0}});
  auto bb = SuperPolynomial::variable(R, "betabar");
  auto gm = SuperPolynomial::variable(R, "gamma");
  for (int r = -(g - 1); r <= g - 1; ++r) {
    const int top = g - std::abs(r);  // R_top = 1
    std::vector<SuperPolynomial> Rk(static_cast<std::size_t>(top + 1), SuperPolynomial(R));
    Rk[static_cast<std::size_t>(top)] = SuperPolynomial::constant(R, Scalar(1));
    for (int k = 0; k < top; ++k) {
      const FloerPiece* p = a.find(k, r);
      if (!p) fail(ErrorCode::StructureMismatch, "missing piece");
      PieceRelation rel = piece_relation(a, *p);
      SuperPolynomial poly = bb.pow(rel.d + 1);
      for (int i = 0; i <= rel.d; ++i) poly = poly + rel.p[static_cast<std::size_t>(i)].constant_term() * bb.pow(i);
      for (const auto& [ij, c] : rel.c) poly = poly - c.constant_term() * (bb.pow(ij.first) * gm.pow(ij.second));
      Rk[static_cast<std::size_t>(k)] = poly;
    }
    for (int k = 0; k < top; ++k) {
      const FloerPiece* p = a.find(k, r);
      const int gbar = top - k;
      IdealPresentation I{R, {}, 4 * gbar + 8, -1};
      for (int m = 0; m <= gbar; ++m) I.generators.push_back(gm.pow(m) * Rk[static_cast<std::size_t>(k + m)]);
      QuotientAlgebra q = quotient_basis(I);
      PieceCoordinates pc = piece_coordinates(a, *p);
      bool ok = q.dim() == p->local.dim && pc.is_basis;
      Json witness = nullptr;
      if (ok) {
        // Compare operators in the shared monomial basis.
        const QuotientAlgebra& T = f.t[static_cast<std::size_t>(k)];
        for (std::size_t b = 0; b < pc.monomials.size() && ok; ++b) {
          const auto [i, j] = pc.monomials[b];
          Monomial m;
          m.e[0] = static_cast<std::uint8_t>(i);
          m.e[1] = static_cast<std::uint8_t>(j);
          const int qi = q.basis_index(m);
          if (qi < 0) {
            ok = false;
            witness = {{"r", r}, {"k", k}, {"missingBasis", bg_monomial(i, j)}};
            break;
          }
          Vector v = piece_monomial(a, *p, i, j);
          Vector bv = *pc.coordinates(betabar_apply(T, betabar_shift(r), v));
          Vector gv = *pc.coordinates(T.operator_of("gamma").apply(v));
          for (int var = 0; var < 2 && ok; ++var) {
            const Vector& mine = var == 0 ? bv : gv;
            Vector theirs = q.op(var).apply(unit_vector(q.dim(), qi));
            for (std::size_t c = 0; c < pc.monomials.size(); ++c) {
              Monomial mc;
              mc.e[0] = static_cast<std::uint8_t>(pc.monomials[c].first);
              mc.e[1] = static_cast<std::uint8_t>(pc.monomials[c].second);
              if (theirs[static_cast<std::size_t>(q.basis_index(mc))] != mine[c]) {
                ok = false;
                witness = {{"r", r}, {"k", k}, {"operator", var == 0 ? "betabar" : "gamma"}, {"on", bg_monomial(i, j)}};
                break;
              }
            }
          }
        }
      } else {
        witness = {{"r", r}, {"k", k}, {"presentedRank", q.dim()}, {"pieceRank", p->local.dim}};
      }
      Json rk = Rk[static_cast<std::size_t>(k)].to_string();
      out.push_back(make_check("hf.presentation", ok, {{"genus", g}, {"k", k}, {"r", r}, {"R_k", rk}}, witness));
    }
  }
  return out;
}

std::vector<CheckResult> check_alpha_quotients(int g) {
  std::vector<CheckResult> out;
  auto rel = build_bar_relations(g, g, PerturbationProfile::unperturbed());
  RingPtr R = floer_bar_ring(0);
  auto a = SuperPolynomial::variable(R, "alpha");
  auto b = SuperPolynomial::variable(R, "beta");
  for (int sgn : {8, -8}) {
    // beta = 8 pairs with the imaginary alpha roots, beta = -8 with the real ones.
    UPoly want{Scalar(1)};
    if (sgn == 8) {
      want = {Scalar(0), Scalar(1)};
      for (int j = 1; j <= (g - 1) / 2; ++j) want = poly_mul(want, {Scalar(16 * 4 * j * j), Scalar(0), Scalar(1)});
    } else {
      for (int j = 1; j <= g / 2; ++j) want = poly_mul(want, {Scalar(-16 * (2 * j - 1) * (2 * j - 1)), Scalar(0), Scalar(1)});
    }
    IdealPresentation I{R, {rel[static_cast<std::size_t>(g)].r1, rel[static_cast<std::size_t>(g)].r2, b - SuperPolynomial::constant(R, Scalar(sgn))},
                        4 * g + 8, -1};
    QuotientAlgebra q = quotient_basis(I);
    UPoly got = q.dim() > 0 ? charpoly(q.operator_of("alpha").to_dense()) : UPoly{Scalar(1)};
    const bool ok = got == want;
    out.push_back(make_check("alpha.quotient", ok, {{"genus", g}, {"beta", sgn}, {"dim", q.dim()}, {"expectedDegree", poly_degree(want)}},
                             {{"charpolyDegree", poly_degree(got)}}));
  }
  return out;
}

Json piece_to_json(const ArtinianAtlas& atlas, const FloerPiece& piece) {
  Json j;
  j["genus"] = atlas.ring->genus;
  j["k"] = piece.k;
  j["r"] = piece.r;
  j["rank"] = piece.local.rank;
  Json ev;
  ev["alpha"] = scalar_json(piece.local.eigenvalue);
  for (const auto& [name, c] : piece.local.constant_terms) {
    if (name != "alpha") ev[name] = scalar_json(c);
  }
  j["eigenvalues"] = ev;
  Json basis = Json::array();
  for (int jj = 0; jj < piece.gbar; ++jj)
    for (int i = 0; 2 * i + jj < piece.gbar; ++i) basis.push_back(bg_monomial(i, jj));
  j["basis"] = basis;
  PieceRelation rel = piece_relation(atlas, piece);
  Json relation;
  relation["d"] = rel.d;
  relation["e"] = rel.e;
  Json pcoef = Json::array();
  for (const auto& s : rel.p) pcoef.push_back(series_json(s));
  relation["P"] = pcoef;
  Json cs = Json::array();
  for (const auto& [ij, c] : rel.c) cs.push_back({{"term", bg_monomial(ij.first, ij.second)}, {"c", series_json(c)}});
  relation["c"] = cs;
  j["relations"] = relation;
  const QuotientAlgebra& q = atlas.ring->t[static_cast<std::size_t>(piece.k)];
  LinearOp bop = shifted(q.operator_of("beta"), betabar_shift(piece.r));
  Json slices = Json::array();
  if (!atlas.ring->profile.has_series()) {
    for (const auto& s : associated_graded(as_op(q.operator_of("gamma")), bop, piece.local.basis)) {
      slices.push_back({{"i", s.index}, {"rank", s.dim}, {"index", s.nilpotency}});
    }
  }
  j["grSlices"] = slices;
  return j;
}

}  // namespace fr
