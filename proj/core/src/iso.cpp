#include "uniso/iso.hpp"

#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uniso {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic:
      return "isomorphic";
    case Verdict::NotIsomorphic:
      return "not_isomorphic";
    case Verdict::Inconclusive:
      return "inconclusive";
    case Verdict::HypothesesNotMet:
      return "hypotheses_not_met";
  }
  return "?";
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

// Visits every coefficient vector of field^dim in lexicographic order.
// Returns false when the visitor stopped early.
bool for_each_coefficients(const FieldSpec& field, std::size_t dim, const std::function<bool(const Vector&)>& visit) {
  bool completed = true;
  for_each_vector(field, dim, [&](const Vector& v) {
    if (!visit(v)) {
      completed = false;
      return false;
    }
    return true;
  });
  return completed;
}

std::uint64_t space_size(const FieldSpec& field, std::size_t dim) { return saturating_pow(*field.order(), dim); }

// Coefficient vectors tried over Q for a Hom space of dimension dim.
std::vector<Vector> rational_candidates(const FieldSpec& field, std::size_t dim, std::uint64_t cap, bool with_grid,
                                        std::size_t grid_degree) {
  std::vector<Vector> out = rational_battery(field, dim);
  if (!with_grid || dim == 0) return out;
  // A nonzero polynomial of degree <= D in each variable cannot vanish on all
  // of {0..D}^dim; the determinant of sum c_i B_i has degree <= grid_degree.
  const std::uint64_t side = grid_degree + 1;
  const std::uint64_t total = saturating_pow(side, dim);
  if (total > cap) return out;
  std::vector<std::uint64_t> idx(dim, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    Vector v;
    for (auto i : idx) v.push_back(field.from_int(static_cast<long long>(i)));
    out.push_back(std::move(v));
    for (std::size_t pos = dim; pos-- > 0;) {
      if (++idx[pos] < side) break;
      idx[pos] = 0;
    }
  }
  return out;
}

bool is_uniserial_safe(const Representation& r) {
  try {
    return is_uniserial(r).uniserial;
  } catch (const Error&) {
    return false;
  }
}

void attach_isomorphism(IsoVerdict& v, const Representation& l, const Representation& m, const SearchOptions& opts) {
  try {
    if (auto iso = find_isomorphism(l, m, opts)) v.isomorphism = std::move(iso);
  } catch (const CapExceeded&) {
  }
}

}  // namespace

std::vector<Vector> rational_battery(const FieldSpec& field, std::size_t dim) {
  std::vector<Vector> out;
  const Scalar one = field.one(), minus = -field.one();
  for (std::size_t i = 0; i < dim; ++i) {
    for (const Scalar& s : {one, minus}) {
      Vector v = zero_vector(field, dim);
      v[i] = s;
      out.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (const Scalar& si : {one, minus}) {
        for (const Scalar& sj : {one, minus}) {
          Vector v = zero_vector(field, dim);
          v[i] = si;
          v[j] = sj;
          out.push_back(std::move(v));
        }
      }
    }
  }
  return out;
}

std::optional<std::string> structural_obstruction(const Representation& l, const Representation& m) {
  require_same_algebra(l, m);
  if (l.dims() != m.dims()) {
    return "dimension vectors differ: " + dims_text(l.dims()) + " vs " + dims_text(m.dims());
  }
  const auto sl = socle(l).dims(), sm = socle(m).dims();
  if (sl != sm) return "socle dimension vectors differ: " + dims_text(sl) + " vs " + dims_text(sm);
  const auto tl = radical(l).dims(), tm = radical(m).dims();
  if (tl != tm) return "radical dimension vectors differ: " + dims_text(tl) + " vs " + dims_text(tm);
  const bool ul = is_uniserial_safe(l), um = is_uniserial_safe(m);
  if (ul != um) return std::string("uniserial flags differ: ") + (ul ? "true" : "false") + " vs " + (um ? "true" : "false");
  return std::nullopt;
}

std::optional<Intertwiner> find_isomorphism(const Representation& l, const Representation& m,
                                            const SearchOptions& opts) {
  require_same_algebra(l, m);
  if (l.dims() != m.dims()) return std::nullopt;
  const HomBasis hom = hom_basis(l, m);
  if (l.total_dim() == 0) return Intertwiner::identity(l);
  if (hom.dimension() == 0) return std::nullopt;
  std::optional<Intertwiner> found;
  const FieldSpec& f = l.field();
  if (f.is_finite()) {
    if (space_size(f, hom.dimension()) > opts.cap) {
      throw CapExceeded("Hom space of size " + std::to_string(*f.order()) + "^" + std::to_string(hom.dimension()) +
                        " exceeds the search cap");
    }
    for_each_coefficients(f, hom.dimension(), [&](const Vector& c) {
      Intertwiner phi = combination(hom, c);
      if (phi.is_invertible()) {
        found = std::move(phi);
        return false;
      }
      return true;
    });
    return found;
  }
  for (const auto& c : rational_candidates(f, hom.dimension(), opts.cap, true, l.total_dim())) {
    Intertwiner phi = combination(hom, c);
    if (phi.is_invertible()) return phi;
  }
  return std::nullopt;
}

IsoVerdict iso_direct(const Representation& l, const Representation& m, const SearchOptions& opts) {
  require_same_algebra(l, m);
  IsoVerdict v;
  v.method = "direct";
  const HomBasis hom = hom_basis(l, m);
  v.hom_dim_lm = hom.dimension();
  v.hom_dim_ml = hom_basis(m, l).dimension();
  if (l.dims() != m.dims()) {
    v.verdict = Verdict::NotIsomorphic;
    v.obstruction = "dimension vectors differ: " + dims_text(l.dims()) + " vs " + dims_text(m.dims());
    v.reason = *v.obstruction;
    return v;
  }
  if (auto obstruction = structural_obstruction(l, m)) {
    v.verdict = Verdict::NotIsomorphic;
    v.obstruction = obstruction;
    v.reason = *obstruction;
    return v;
  }
  const FieldSpec& f = l.field();
  if (l.total_dim() == 0) {
    v.verdict = Verdict::Isomorphic;
    v.isomorphism = Intertwiner::identity(l);
    v.reason = "both modules are zero";
    return v;
  }
  if (hom.dimension() == 0) {
    v.verdict = Verdict::NotIsomorphic;
    v.exhaustion = ExhaustionCertificate{"Hom(L,M)", 1};
    v.examined = 1;
    v.reason = "not_isomorphic, hom dimension 0";
    return v;
  }
  if (f.is_finite()) {
    const std::uint64_t size = space_size(f, hom.dimension());
    if (size > opts.cap) {
      v.verdict = Verdict::Inconclusive;
      v.reason = "Hom(L,M) has " + std::to_string(*f.order()) + "^" + std::to_string(hom.dimension()) +
                 " elements, beyond the search cap";
      return v;
    }
    for_each_coefficients(f, hom.dimension(), [&](const Vector& c) {
      ++v.examined;
      Intertwiner phi = combination(hom, c);
      if (phi.is_invertible()) {
        v.isomorphism = std::move(phi);
        return false;
      }
      return true;
    });
    if (v.isomorphism) {
      v.verdict = Verdict::Isomorphic;
      v.reason = "invertible intertwiner found";
    } else {
      v.verdict = Verdict::NotIsomorphic;
      v.exhaustion = ExhaustionCertificate{"Hom(L,M) over " + f.name(), size};
      v.reason = "no invertible element among all " + std::to_string(size) + " elements of Hom(L,M)";
    }
    return v;
  }
  for (const auto& c : rational_candidates(f, hom.dimension(), opts.cap, true, l.total_dim())) {
    ++v.examined;
    Intertwiner phi = combination(hom, c);
    if (phi.is_invertible()) {
      v.isomorphism = std::move(phi);
      v.verdict = Verdict::Isomorphic;
      v.reason = "invertible intertwiner found";
      return v;
    }
  }
  v.verdict = Verdict::Inconclusive;
  v.reason = "no invertible element in the search battery over Q";
  return v;
}

AlternatingSearch alternating_search(const HomBasis& lm, const HomBasis& ml, std::size_t k, const SearchOptions& opts) {
  AlternatingSearch out;
  out.search_size = saturating_mul(saturating_pow(lm.dimension(), (k + 1) / 2), saturating_pow(ml.dimension(), k / 2));
  if (k == 0) {
    // The empty composition is the identity of L.
    out.found_nonzero = lm.source.total_dim() > 0;
    if (out.found_nonzero) out.witness = std::vector<Intertwiner>{};
    return out;
  }
  std::vector<std::size_t> choice;
  std::vector<Intertwiner> prefix;
  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    const HomBasis& pool = depth % 2 == 0 ? lm : ml;
    for (std::size_t i = 0; i < pool.dimension(); ++i) {
      if (++out.compositions > opts.cap) {
        throw CapExceeded("alternating composition search exceeds the cap of " + std::to_string(opts.cap));
      }
      Intertwiner next = depth == 0 ? pool.basis[i] : compose(pool.basis[i], prefix.back());
      if (next.is_zero()) continue;  // every extension of a zero prefix is zero
      choice.push_back(i);
      prefix.push_back(std::move(next));
      if (depth + 1 == k) {
        out.found_nonzero = true;
        std::vector<Intertwiner> w;
        for (std::size_t d = 0; d < choice.size(); ++d) w.push_back((d % 2 == 0 ? lm : ml).basis[choice[d]]);
        out.witness = std::move(w);
        return true;
      }
      if (dfs(depth + 1)) return true;
      choice.pop_back();
      prefix.pop_back();
    }
    return false;
  };
  dfs(0);
  return out;
}

IsoVerdict nfold_criterion(const Representation& l, const Representation& m, const SearchOptions& opts) {
  require_same_algebra(l, m);
  IsoVerdict v;
  v.method = "nfold";
  const std::size_t n = length(l);
  const bool hypotheses = is_uniform(l) && is_uniform(m) && length(l) == length(m);
  const HomBasis lm = hom_basis(l, m), ml = hom_basis(m, l);
  v.hom_dim_lm = lm.dimension();
  v.hom_dim_ml = ml.dimension();
  if (n == 0 && length(m) == 0) {
    v.verdict = Verdict::Isomorphic;
    v.isomorphism = Intertwiner::identity(l);
    v.reason = "both modules are zero";
    return v;
  }
  AlternatingSearch search;
  try {
    search = alternating_search(lm, ml, n, opts);
  } catch (const CapExceeded& e) {
    v.verdict = Verdict::Inconclusive;
    v.reason = e.what();
    return v;
  }
  v.examined = search.compositions;
  if (search.found_nonzero) v.tuple = search.witness;
  if (!hypotheses) {
    v.verdict = Verdict::HypothesesNotMet;
    v.raw_found = search.found_nonzero;
    v.reason = std::string("modules are not both uniform of the same finite length; raw search: ") +
               (search.found_nonzero ? "nonzero " : "no nonzero ") + std::to_string(n) + "-fold composition";
    return v;
  }
  if (search.found_nonzero) {
    v.verdict = Verdict::Isomorphic;
    v.reason = "nonzero " + std::to_string(n) + "-fold alternating composition of basis morphisms";
    attach_isomorphism(v, l, m, opts);
    if (!v.isomorphism) {
      v.verdict = Verdict::Inconclusive;
      v.reason += "; no isomorphism witness within the search cap";
    }
  } else {
    v.verdict = Verdict::NotIsomorphic;
    v.exhaustion = ExhaustionCertificate{"alternating basis tuples of length " + std::to_string(n), search.search_size};
    v.reason = lm.dimension() == 0 || ml.dimension() == 0
                   ? "not_isomorphic, hom dimension 0"
                   : "not_isomorphic, every " + std::to_string(n) + "-fold composition vanishes (hom dimension " +
                         std::to_string(lm.dimension()) + ")";
  }
  return v;
}

IsoVerdict two_morphism_criterion(const Representation& l, const Representation& m, const SearchOptions& opts) {
  require_same_algebra(l, m);
  IsoVerdict v;
  v.method = "two-morphism";
  const bool uniform = is_uniform(l) && is_uniform(m);
  const bool hypotheses = uniform && length(l) == length(m);
  const HomBasis lm = hom_basis(l, m), ml = hom_basis(m, l);
  v.hom_dim_lm = lm.dimension();
  v.hom_dim_ml = ml.dimension();
  const FieldSpec& f = l.field();

  if (l.total_dim() == 0 && m.total_dim() == 0) {
    v.verdict = Verdict::Isomorphic;
    v.isomorphism = Intertwiner::identity(l);
    v.reason = "both modules are zero";
    return v;
  }

  std::optional<FixedPointWitness> witness;
  bool exhaustive = f.is_finite();
  std::uint64_t size = 0;
  auto try_pair = [&](const Intertwiner& phi, const Intertwiner& psi) {
    ++v.examined;
    const Subspace fixed = fixed_space(compose(psi, phi));
    if (fixed.is_zero()) return false;
    witness = FixedPointWitness{phi, psi, unflatten(l, fixed.basis_vector(0))};
    return true;
  };

  if (f.is_finite()) {
    size = saturating_mul(space_size(f, lm.dimension()), space_size(f, ml.dimension()));
    if (size > opts.cap) {
      v.verdict = Verdict::Inconclusive;
      v.reason = "Hom(L,M) x Hom(M,L) has " + std::to_string(size) + " pairs, beyond the search cap";
      return v;
    }
    std::vector<Intertwiner> gs;
    for_each_coefficients(f, ml.dimension(), [&](const Vector& c) {
      gs.push_back(combination(ml, c));
      return true;
    });
    for_each_coefficients(f, lm.dimension(), [&](const Vector& c) {
      const Intertwiner phi = combination(lm, c);
      if (phi.is_zero()) {
        v.examined += gs.size();
        return true;
      }
      for (const auto& psi : gs) {
        if (try_pair(phi, psi)) return false;
      }
      return true;
    });
  } else {
    const auto fs = rational_candidates(f, lm.dimension(), opts.cap, false, 0);
    const auto gs = rational_candidates(f, ml.dimension(), opts.cap, false, 0);
    for (const auto& cf : fs) {
      const Intertwiner phi = combination(lm, cf);
      bool done = false;
      for (const auto& cg : gs) {
        if (try_pair(phi, combination(ml, cg))) {
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }

  if (witness && uniform) {
    // Injectivity forced by a fixed point between uniform modules.
    if (!classify(witness->f).injective || !classify(witness->g).injective) {
      throw std::logic_error("fixed point witness with a non-injective morphism between uniform modules");
    }
  }
  if (witness) v.fixed_point = witness;

  if (!hypotheses) {
    v.verdict = Verdict::HypothesesNotMet;
    v.raw_found = witness.has_value();
    v.reason = std::string("modules are not both uniform of the same finite length; raw search: ") +
               (witness ? "fixed point found" : "no fixed point");
    return v;
  }
  if (witness) {
    v.verdict = Verdict::Isomorphic;
    v.reason = "g∘f fixes a nonzero element";
    attach_isomorphism(v, l, m, opts);
    if (!v.isomorphism) {
      v.verdict = Verdict::Inconclusive;
      v.reason += "; no isomorphism witness within the search cap";
    }
  } else if (exhaustive) {
    v.verdict = Verdict::NotIsomorphic;
    v.exhaustion = ExhaustionCertificate{"Hom(L,M) x Hom(M,L) over " + f.name(), size};
    v.reason = "no g∘f has a nonzero fixed point among all " + std::to_string(size) + " pairs";
  } else {
    v.verdict = Verdict::Inconclusive;
    v.reason = "no fixed point in the search battery over Q";
  }
  return v;
}

IsoVerdict mono_epi_criterion(const Representation& l, const Representation& m, const SearchOptions& opts) {
  require_same_algebra(l, m);
  IsoVerdict v;
  v.method = "mono-epi";
  const bool hypotheses = is_uniserial_safe(l) && is_uniserial_safe(m);
  const HomBasis lm = hom_basis(l, m);
  v.hom_dim_lm = lm.dimension();
  v.hom_dim_ml = hom_basis(m, l).dimension();
  const FieldSpec& f = l.field();

  std::optional<Intertwiner> mono, epi;
  auto inspect = [&](const Intertwiner& phi) {
    ++v.examined;
    if (!mono || !epi) {
      const Classification c = classify(phi);
      if (!mono && c.injective) mono = phi;
      if (!epi && c.surjective) epi = phi;
    }
    return !(mono && epi);
  };
  std::uint64_t size = 0;
  if (f.is_finite()) {
    size = space_size(f, lm.dimension());
    if (size > opts.cap) {
      v.verdict = Verdict::Inconclusive;
      v.reason = "Hom(L,M) has " + std::to_string(size) + " elements, beyond the search cap";
      return v;
    }
    for_each_coefficients(f, lm.dimension(), [&](const Vector& c) { return inspect(combination(lm, c)); });
  } else {
    if (lm.dimension() == 0) inspect(Intertwiner::zero(l, m));
    for (const auto& c : rational_candidates(f, lm.dimension(), opts.cap, true, l.total_dim())) {
      if (!inspect(combination(lm, c))) break;
    }
  }

  if (mono && epi) v.mono_epi = MonoEpiWitness{*mono, *epi};
  if (!hypotheses) {
    v.verdict = Verdict::HypothesesNotMet;
    v.raw_found = mono && epi;
    v.reason = std::string("modules are not both uniserial; raw search: ") +
               (mono && epi ? "monomorphism and epimorphism found" : "no monomorphism/epimorphism pair");
    return v;
  }
  if (mono && epi) {
    v.verdict = Verdict::Isomorphic;
    v.reason = "Hom(L,M) contains a monomorphism and an epimorphism";
    attach_isomorphism(v, l, m, opts);
    if (!v.isomorphism) {
      v.verdict = Verdict::Inconclusive;
      v.reason += "; no isomorphism witness within the search cap";
    }
  } else if (f.is_finite()) {
    v.verdict = Verdict::NotIsomorphic;
    v.exhaustion = ExhaustionCertificate{"Hom(L,M) over " + f.name(), size};
    v.reason = std::string("Hom(L,M) has no ") + (mono ? "epimorphism" : "monomorphism") + " among all " +
               std::to_string(size) + " elements";
  } else {
    v.verdict = Verdict::Inconclusive;
    v.reason = "no monomorphism/epimorphism pair in the search battery over Q";
  }
  return v;
}

std::vector<IsoVerdict> iso_all(const Representation& l, const Representation& m, const SearchOptions& opts) {
  std::vector<IsoVerdict> out;
  out.push_back(iso_direct(l, m, opts));
  out.push_back(nfold_criterion(l, m, opts));
  out.push_back(two_morphism_criterion(l, m, opts));
  if (is_uniserial_safe(l) && is_uniserial_safe(m)) out.push_back(mono_epi_criterion(l, m, opts));
  return out;
}

WeakenedBound verify_weakened_bound(const Representation& l, const Representation& m, std::size_t fold,
                                    const SearchOptions& opts) {
  const HomBasis lm = hom_basis(l, m), ml = hom_basis(m, l);
  WeakenedBound out;
  out.some_mfold_nonzero = alternating_search(lm, ml, fold, opts).found_nonzero;
  out.all_mplus1fold_zero = !alternating_search(lm, ml, fold + 1, opts).found_nonzero;
  return out;
}

std::vector<std::size_t> max_alternating_image_lengths(const Representation& l, const Representation& m,
                                                       std::size_t n, const SearchOptions& opts) {
  const HomBasis lm = hom_basis(l, m), ml = hom_basis(m, l);
  std::vector<std::size_t> best(n, 0);
  std::uint64_t steps = 0;
  std::function<void(std::size_t, const std::optional<Intertwiner>&)> dfs = [&](std::size_t depth,
                                                                                 const std::optional<Intertwiner>& prefix) {
    if (depth == n) return;
    const HomBasis& pool = depth % 2 == 0 ? lm : ml;
    for (const auto& b : pool.basis) {
      if (++steps > opts.cap) throw CapExceeded("image length search exceeds the cap");
      Intertwiner next = prefix ? compose(b, *prefix) : b;
      const std::size_t len = image(next).total_dim();
      if (len > best[depth]) best[depth] = len;
      if (len == 0) continue;
      dfs(depth + 1, next);
    }
  };
  dfs(0, std::nullopt);
  return best;
}

}  // namespace uniso
