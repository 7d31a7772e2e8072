#include "mlat/zn.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "mlat/error.hpp"
#include "mlat/families.hpp"

namespace mlat {

ZnModel::ZnModel(unsigned modulus) : n(modulus) {
  if (n < 2) throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
}

Element ZnModel::element_of(unsigned d) const {
  auto it = std::find(divisors.begin(), divisors.end(), d);
  if (it == divisors.end()) throw Error(ErrorCode::BadParams, std::to_string(d) + " does not divide " + std::to_string(n));
  return static_cast<Element>(divisors.end() - it - 1);
}

MultLattice ideal_lattice(unsigned n) {
  const ZnModel z(n);
  const std::size_t size = z.divisors.size();
  if (size > kMaxElements) throw Error(ErrorCode::BadModulus, std::to_string(n) + " has more than 64 divisors");
  std::vector<std::string> labels;
  for (Element e = 0; e < size; ++e) {
    const unsigned d = z.divisor_of(e);
    labels.push_back(d == n ? "(0)" : "(" + std::to_string(d) + ")");
  }
  std::vector<bool> leq(size * size);
  std::vector<Element> cells(size * size);
  for (Element a = 0; a < size; ++a) {
    for (Element b = 0; b < size; ++b) {
      leq[a * size + b] = z.divisor_of(a) % z.divisor_of(b) == 0;
      cells[a * size + b] = z.element_of(std::gcd(z.divisor_of(a) * z.divisor_of(b), n));
    }
  }
  return classify_multiplication(FiniteLattice::from_order("Id(Z" + std::to_string(n) + ")", labels, leq),
                                 MultTable(size, std::move(cells)));
}

namespace {

using Residues = std::uint64_t;

void require_small_modulus(unsigned n) {
  if (n < 2 || n > 64) throw Error(ErrorCode::BadModulus, "ring-side checks need 2 <= n <= 64");
}

Residues bit(unsigned r) { return Residues{1} << r; }

// Z_n computed from residue sets alone. Ideals are indexed like the lattice
// elements of ideal_lattice(n); everything else is derived by scanning.
class RingOracle {
 public:
  explicit RingOracle(unsigned n) : n_(n), model_(n) {
    require_small_modulus(n);
    d_ = model_.divisors.size();
    for (Element e = 0; e < d_; ++e) {
      Residues m = 0;
      for (unsigned r = 0; r < n; r += model_.divisor_of(e)) m |= bit(r);
      masks_.push_back(m);
    }
    sum_.resize(d_ * d_);
    prod_.resize(d_ * d_);
    colon_.resize(d_ * d_);
    for (Element a = 0; a < d_; ++a) {
      for (Element b = 0; b < d_; ++b) {
        sum_[a * d_ + b] = generated(masks_[a] | masks_[b]);
        Residues products = 0;
        Residues quotient = 0;
        for (unsigned x = 0; x < n; ++x) {
          if (!(masks_[a] >> x & 1U)) continue;
          for (unsigned y = 0; y < n; ++y) {
            if (masks_[b] >> y & 1U) products |= bit(x * y % n);
          }
        }
        for (unsigned r = 0; r < n; ++r) {
          bool inside = true;
          for (unsigned y = 0; y < n && inside; ++y) {
            if ((masks_[b] >> y & 1U) && !(masks_[a] >> (r * y % n) & 1U)) inside = false;
          }
          if (inside) quotient |= bit(r);
        }
        prod_[a * d_ + b] = generated(products);
        colon_[a * d_ + b] = generated(quotient);
      }
    }
    scale_.resize(n * d_);
    for (unsigned s = 0; s < n; ++s) {
      for (Element a = 0; a < d_; ++a) {
        Residues scaled = 0;
        for (unsigned x = 0; x < n; ++x) {
          if (masks_[a] >> x & 1U) scaled |= bit(s * x % n);
        }
        scale_[s * d_ + a] = generated(scaled);
      }
    }
    works_.assign(d_ * n, false);
    works_ideal_.assign(d_ * n, false);
    for (Element p = 0; p < d_; ++p) {
      std::vector<Residues> divides(n);  // b with a*b in P
      for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
          if (masks_[p] >> (a * b % n) & 1U) divides[a] |= bit(b);
        }
      }
      for (unsigned s = 0; s < n; ++s) {
        Residues escaping = 0;  // a with s*a outside P
        for (unsigned a = 0; a < n; ++a) {
          if (!(masks_[p] >> (s * a % n) & 1U)) escaping |= bit(a);
        }
        bool ok = true;
        for (unsigned a = 0; a < n && ok; ++a) {
          if ((escaping >> a & 1U) && (divides[a] & escaping)) ok = false;
        }
        works_[p * n + s] = ok;
        bool ideal_ok = true;
        for (Element i = 0; i < d_ && ideal_ok; ++i) {
          for (Element j = 0; j < d_ && ideal_ok; ++j) {
            if (contained(prod(i, j), p) && !contained(scale(s, i), p) && !contained(scale(s, j), p)) ideal_ok = false;
          }
        }
        works_ideal_[p * n + s] = ideal_ok;
      }
    }
  }

  unsigned n() const { return n_; }
  std::size_t ideals() const { return d_; }
  Residues mask(Element i) const { return masks_[i]; }
  bool contained(Element i, Element j) const { return (masks_[i] & ~masks_[j]) == 0; }
  Element sum(Element a, Element b) const { return sum_[a * d_ + b]; }
  Element prod(Element a, Element b) const { return prod_[a * d_ + b]; }
  Element colon(Element a, Element b) const { return colon_[a * d_ + b]; }
  Element scale(unsigned s, Element a) const { return scale_[s * d_ + a]; }
  bool works(Element p, unsigned s) const { return works_[p * n_ + s]; }
  bool works_ideal(Element p, unsigned s) const { return works_ideal_[p * n_ + s]; }
  unsigned generator(Element i) const { return model_.divisor_of(i); }
  Element ideal_of_generator(unsigned d) const { return model_.element_of(d); }

  /// Smallest ideal containing the residues.
  Element generated(Residues residues) const {
    Residues meet = ~Residues{0};
    for (Element e = 0; e < d_; ++e) {
      if ((residues & ~masks_[e]) == 0) meet &= masks_[e];
    }
    for (Element e = 0; e < d_; ++e) {
      if (masks_[e] == meet) return e;
    }
    throw Error(ErrorCode::BadModulus, "ideal intersection is not principal");
  }

  /// Ideal generated by a single residue.
  Element principal(unsigned s) const { return generated(bit(s % n_)); }

  bool s_prime(const std::vector<unsigned>& s, Element p) const {
    for (unsigned t : s) {
      if (masks_[p] >> t & 1U) return false;
    }
    return std::any_of(s.begin(), s.end(), [&](unsigned t) { return works(p, t); });
  }

  bool s_ako(ElementSet f, const std::vector<unsigned>& s) const {
    for (unsigned t : s) {
      for (Element i = 0; i < d_; ++i) {
        ElementSet usable;
        for (Element a = 0; a < d_; ++a) {
          if (f.contains(sum(i, scale(t, a)))) usable.insert(a);
        }
        for (Element a : usable) {
          for (Element b : usable) {
            if (!f.contains(sum(i, prod(a, b)))) return false;
          }
        }
      }
    }
    return true;
  }

  bool s_oka(ElementSet f, const std::vector<unsigned>& s) const {
    for (unsigned t : s) {
      for (Element i = 0; i < d_; ++i) {
        if (f.contains(i)) continue;
        for (Element a = 0; a < d_; ++a) {
          const Element ta = scale(t, a);
          if (f.contains(sum(i, ta)) && f.contains(colon(i, ta))) return false;
        }
      }
    }
    return true;
  }

 private:
  unsigned n_;
  ZnModel model_;
  std::size_t d_ = 0;
  std::vector<Residues> masks_;
  std::vector<Element> sum_, prod_, colon_, scale_;
  std::vector<bool> works_, works_ideal_;
};

std::vector<Binding> s_binding(const MClosedSet& s) {
  std::vector<Binding> out;
  for (Element e : s.members()) out.push_back({"S", e});
  return out;
}

std::string residue_list(const std::vector<unsigned>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

TheoremReport run_crosscheck(const RingOracle& ring, const MultLattice& m,
                             const std::vector<std::vector<unsigned>>& sets, const CrosscheckOptions& options) {
  TheoremReport r;
  r.id = "crosscheck";
  r.host = m.name();
  r.preconditions.push_back({"s-valid", Verdict::pass()});
  const auto d = static_cast<Element>(ring.ideals());
  auto finish = [&](Verdict v) {
    r.conclusion = std::move(v);
    settle(r);
    return r;
  };

  for (Element a = 0; a < d; ++a) {
    for (Element b = 0; b < d; ++b) {
      if (ring.sum(a, b) != m.join(a, b)) return finish(Verdict::fail("ideal sum differs from join", {{"a", a}, {"b", b}}));
      if (ring.prod(a, b) != m.mul(a, b)) return finish(Verdict::fail("ideal product differs from multiplication", {{"a", a}, {"b", b}}));
      if (ring.colon(a, b) != m.residual(a, b)) return finish(Verdict::fail("ring colon differs from residual", {{"a", a}, {"b", b}}));
    }
  }
  for (Element p = 0; p < d; ++p) {
    for (unsigned s = 0; s < ring.n(); ++s) {
      if (ring.works(p, s) != ring.works_ideal(p, s)) {
        return finish(Verdict::fail("element-wise and ideal-wise S-prime forms disagree for s=" + std::to_string(s), {{"p", p}}));
      }
    }
  }

  std::vector<MClosedSet> lattice_sets;
  std::unordered_map<std::uint64_t, ElementSet> spec_cache;
  for (const auto& s : sets) {
    lattice_sets.push_back(lattice_s(m, ring.n(), s));
    const MClosedSet& sl = lattice_sets.back();
    auto [it, fresh] = spec_cache.try_emplace(sl.members().bits());
    if (fresh) it->second = spec_s(m, sl);
    ElementSet ring_spec;
    for (Element p = 0; p < d; ++p) {
      if (ring.s_prime(s, p)) ring_spec.insert(p);
    }
    if (ring_spec != it->second) {
      const Element p = ((ring_spec - it->second) | (it->second - ring_spec)).first();
      std::vector<Binding> w{{"p", p}};
      for (const auto& b : s_binding(sl)) w.push_back(b);
      return finish(Verdict::fail("S-prime ideals differ from Spec_S for S=" + residue_list(s), std::move(w)));
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const std::size_t idx = pick(rng);
    const MClosedSet& sl = lattice_sets[idx];
    ElementFamily f{(ElementSet::from_bits(rng()) & ElementSet::all(d)) | sl.members()};
    if (k % 2 == 1) f.members = up_closure(m.lattice(), f.members);
    const bool ako_ring = ring.s_ako(f.members, sets[idx]);
    const bool oka_ring = ring.s_oka(f.members, sets[idx]);
    const bool ako_lat = is_s_ako(m, f, sl).passed();
    const bool oka_lat = is_s_oka(m, f, sl).passed();
    if (ako_ring != ako_lat || oka_ring != oka_lat) {
      std::vector<Binding> w = s_binding(sl);
      for (Element e : f.members) w.push_back({"F", e});
      return finish(Verdict::fail(std::string(ako_ring != ako_lat ? "S-Ako" : "S-Oka") +
                                      " verdicts differ for S=" + residue_list(sets[idx]),
                                  std::move(w)));
    }
  }
  r.note = std::to_string(sets.size()) + " S, " + std::to_string(d) + " ideals, " + std::to_string(options.samples) +
           " families";
  return finish(Verdict::pass(r.note));
}

}  // namespace

unsigned ring_colon(unsigned n, unsigned a, unsigned b) {
  require_small_modulus(n);
  const RingOracle ring(n);
  return ring.generator(ring.colon(ring.ideal_of_generator(a), ring.ideal_of_generator(b)));
}

std::vector<unsigned> validate_ring_s(unsigned n, std::vector<unsigned> s) {
  for (unsigned& x : s) x %= n;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!std::binary_search(s.begin(), s.end(), 1U)) throw Error(ErrorCode::SNotClosed, "S must contain 1");
  if (std::binary_search(s.begin(), s.end(), 0U)) throw Error(ErrorCode::SNotClosed, "S must not contain 0");
  for (unsigned x : s) {
    for (unsigned y : s) {
      if (!std::binary_search(s.begin(), s.end(), x * y % n)) {
        throw Error(ErrorCode::SNotClosed,
                    std::to_string(x) + "*" + std::to_string(y) + " = " + std::to_string(x * y % n) + " is not in S",
                    {{"s1", x}, {"s2", y}});
      }
    }
  }
  return s;
}

Verdict ring_s_prime(unsigned n, const std::vector<unsigned>& s_in, unsigned p) {
  require_small_modulus(n);
  const std::vector<unsigned> s = validate_ring_s(n, s_in);
  if (n % p != 0) throw Error(ErrorCode::BadParams, std::to_string(p) + " does not divide " + std::to_string(n));
  const RingOracle ring(n);
  const Element pe = ring.ideal_of_generator(p);
  for (unsigned t : s) {
    if (ring.mask(pe) >> t & 1U) return Verdict::fail("S meets P", {{"t", t}});
  }
  for (unsigned t : s) {
    if (ring.works(pe, t) != ring.works_ideal(pe, t)) {
      throw Error(ErrorCode::PreconditionViolated, "element-wise and ideal-wise forms disagree", {{"s", t}});
    }
  }
  for (unsigned t : s) {
    if (ring.works(pe, t)) return Verdict::pass("", {{"s", t}});
  }
  const unsigned t = s.front();
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      const Residues pm = ring.mask(pe);
      if ((pm >> (a * b % n) & 1U) && !(pm >> (t * a % n) & 1U) && !(pm >> (t * b % n) & 1U)) {
        return Verdict::fail("no s in S works", {{"s", t}, {"a", a}, {"b", b}});
      }
    }
  }
  return Verdict::fail("no s in S works", {});
}

std::vector<std::vector<unsigned>> enumerate_ring_mclosed(unsigned n) {
  require_small_modulus(n);
  std::vector<std::vector<unsigned>> out;
  auto close = [n](Residues closed, unsigned x) {
    std::vector<unsigned> work{x};
    closed |= bit(x);
    while (!work.empty()) {
      const unsigned y = work.back();
      work.pop_back();
      for (unsigned z = 0; z < n; ++z) {
        if (!(closed >> z & 1U)) continue;
        const unsigned p = y * z % n;
        if (!(closed >> p & 1U)) {
          closed |= bit(p);
          work.push_back(p);
        }
      }
    }
    return closed;
  };
  // Include/exclude on the least undecided residue; each leaf is one set.
  auto recurse = [&](auto&& self, Residues closed, Residues excluded, unsigned next) -> void {
    while (next < n && ((closed | excluded) >> next & 1U)) ++next;
    if (next >= n) {
      std::vector<unsigned> s;
      for (unsigned r = 0; r < n; ++r) {
        if (closed >> r & 1U) s.push_back(r);
      }
      out.push_back(std::move(s));
      return;
    }
    const Residues with = close(closed, next);
    if ((with & excluded) == 0) self(self, with, excluded, next + 1);
    self(self, closed, excluded | bit(next), next + 1);
  };
  recurse(recurse, bit(1 % n), bit(0), 2);
  return out;
}

MClosedSet lattice_s(const MultLattice& idzn, unsigned n, const std::vector<unsigned>& s) {
  const ZnModel z(n);
  if (idzn.size() != z.divisors.size()) throw Error(ErrorCode::DimensionMismatch, "lattice is not Id(Z" + std::to_string(n) + ")");
  ElementSet members;
  for (unsigned t : validate_ring_s(n, s)) members.insert(z.element_of(std::gcd(t, n)));
  return validate_mclosed(idzn, members);
}

TheoremReport crosscheck(unsigned n, const std::vector<unsigned>& s, const CrosscheckOptions& options) {
  const RingOracle ring(n);
  return run_crosscheck(ring, ideal_lattice(n), {validate_ring_s(n, s)}, options);
}

TheoremReport crosscheck_all(unsigned n, const CrosscheckOptions& options) {
  const RingOracle ring(n);
  return run_crosscheck(ring, ideal_lattice(n), enumerate_ring_mclosed(n), options);
}

}  // namespace mlat
