#include "sgp/witnesses.hpp"

#include <map>
#include <stdexcept>

namespace sgp::witnesses {

SymbolicSemigroup w1() {
  SymbolicSemigroup s;
  s.name = "W1";
  s.product = [](const Term& a, const Term& b) {
    if (a.tag == Tag::XPow && b.tag == Tag::XPow) {
      return Term::xpow(a.ints[0] + b.ints[0]);
    }
    if (a.tag == Tag::AElem && b.tag == Tag::XPow) {
      return Term::aelem(a.ints[0] - b.ints[0]);  // a_i x^n = a_{i-n}
    }
    return b;  // x^n a_j = a_i a_j = a_j
  };
  s.grade = [](std::int64_t g) {
    std::vector<Term> out;
    if (g == 0) {
      out = {Term::xpow(0), Term::aelem(0)};
    } else {
      out = {Term::xpow(g), Term::aelem(g), Term::aelem(-g)};
    }
    return out;
  };
  s.identity = Term::xpow(0);
  s.declared_r_noetherian = true;
  s.declared_no_lri = false;
  return s;
}

SymbolicSemigroup w2() {
  auto s = adjoin_zero(w1());
  s.name = "W2";
  s.declared_r_noetherian = true;
  return s;
}

EndoAction w2_phi_action() {
  EndoAction phi;
  phi.domain = w2();
  phi.index = as_symbolic(trivial_monoid());
  phi.apply = [](const Term&, const Term& s) {
    if (s.tag == Tag::XPow) {
      return s;
    }
    return Term::zero();  // a_i and 0 both go to 0
  };
  return phi;
}

SymbolicSemigroup w3() {
  auto s = unit_schutzenberger(w1());
  s.name = "W3";
  s.declared_r_noetherian = false;
  return s;
}

SymbolicSemigroup w4() {
  auto s = free_monoid(1);
  s.name = "W4";
  return s;
}

SymbolicSemigroup w5() {
  auto s = bruck_reilly(cyclic_group(2), {0, 0});
  s.name = "W5";
  s.declared_r_noetherian = true;
  return s;
}

SymbolicStrongDecomposition w6_decomposition() {
  SymbolicStrongDecomposition d;

  SymbolicSemigroup y;  // (N, min), elements (i) for i >= 1
  y.name = "(N,min)";
  y.product = [](const Term& a, const Term& b) {
    return Term::tup({std::min(a.ints[0], b.ints[0])});
  };
  y.grade = [](std::int64_t g) {
    std::vector<Term> out;
    if (g >= 1) {
      out.push_back(Term::tup({g}));
    }
    return out;
  };
  d.y = y;

  d.component = [](const Term& alpha) {
    auto const i = alpha.ints[0];
    SymbolicSemigroup c;  // ({i} x N, max)
    c.name = "S_" + std::to_string(i);
    c.product = [](const Term& a, const Term& b) {
      return Term::tup({a.ints[0], std::max(a.ints[1], b.ints[1])});
    };
    c.grade = [i](std::int64_t g) {
      std::vector<Term> out;
      if (g >= 1) {
        out.push_back(Term::tup({i, g}));
      }
      return out;
    };
    return c;
  };

  // phi_{i,j}(i, n) = (j, n + i - j) for i >= j.
  d.transition = [](const Term& alpha, const Term& beta, const Term& a) {
    auto const i = alpha.ints[0];
    auto const j = beta.ints[0];
    return Term::tup({j, a.ints[1] + i - j});
  };
  return d;
}

SymbolicSemigroup w6() {
  std::vector<Term> box;
  for (std::int64_t i = 1; i <= 5; ++i) {
    box.push_back(Term::tup({i}));
  }
  auto s = strong_semilattice_symbolic(w6_decomposition(), box, 200);
  s.name = "W6";
  s.declared_r_noetherian = true;
  return s;
}

SymbolicSemigroup w7() {
  SymbolicSemigroup s;
  s.name = "W7";
  s.product = [](const Term& a, const Term& b) {
    if (a.tag == Tag::XPow && b.tag == Tag::XPow) {
      return Term::xpow(a.ints[0] + b.ints[0]);
    }
    if (a.tag == Tag::XPow && b.tag == Tag::AElem) {
      return Term::aelem(b.ints[0] - a.ints[0]);  // x^i a_j = a_{j-i}
    }
    if (a.tag == Tag::AElem && b.tag == Tag::XPow) {
      return Term::aelem(a.ints[0] - b.ints[0]);  // a_j x^i = a_{j-i}
    }
    return Term::zero();  // uv = 0 for u, v in N, and 0 absorbs
  };
  s.grade = [](std::int64_t g) {
    std::vector<Term> out;
    if (g == 0) {
      out = {Term::zero(), Term::aelem(0)};
    } else {
      out = {Term::xpow(g), Term::aelem(g), Term::aelem(-g)};
    }
    return out;
  };
  s.zero = Term::zero();
  s.declared_r_noetherian = false;
  return s;
}

int w7_component(const Term& t) { return t.tag == Tag::XPow ? 1 : 0; }

SymbolicSemigroup free_semigroup_monogenic() {
  SymbolicSemigroup s;
  s.name = "{x}+";
  s.product = [](const Term& a, const Term& b) {
    return Term::xpow(a.ints[0] + b.ints[0]);
  };
  s.grade = [](std::int64_t g) {
    std::vector<Term> out;
    if (g >= 1) {
      out.push_back(Term::xpow(g));
    }
    return out;
  };
  s.declared_r_noetherian = true;
  s.declared_no_lri = true;  // left cancellative and idempotent-free
  return s;
}

SymbolicSemigroup free_semigroup(int letters) {
  if (letters < 1) {
    throw std::invalid_argument("free_semigroup: empty alphabet");
  }
  SymbolicSemigroup s;
  s.name = "free[" + std::to_string(letters) + "]";
  s.product = [](const Term& a, const Term& b) {
    std::vector<std::int64_t> w = a.ints;
    w.insert(w.end(), b.ints.begin(), b.ints.end());
    return Term::word(std::move(w));
  };
  s.grade = [letters](std::int64_t g) {
    std::vector<Term> out;
    if (g < 1) {
      return out;
    }
    // All words of length g.
    std::vector<std::int64_t> word(g, 0);
    while (true) {
      out.push_back(Term::word(word));
      int pos = static_cast<int>(g) - 1;
      while (pos >= 0 && word[pos] == letters - 1) {
        word[pos--] = 0;
      }
      if (pos < 0) {
        break;
      }
      ++word[pos];
    }
    return out;
  };
  s.declared_r_noetherian = true;
  s.declared_no_lri = true;
  return s;
}

SymbolicSemigroup free_monoid(int letters) {
  if (letters == 1) {
    SymbolicSemigroup s;
    s.name = "{x}*";
    s.product = [](const Term& a, const Term& b) {
      return Term::xpow(a.ints[0] + b.ints[0]);
    };
    s.grade = [](std::int64_t g) {
      return std::vector<Term>{Term::xpow(g)};
    };
    s.identity = Term::xpow(0);
    s.declared_r_noetherian = true;
    s.declared_no_lri = false;  // the identity is its own LRI
    return s;
  }
  auto base = free_semigroup(letters);
  auto s = adjoin_identity(base);
  s.name = "free-monoid[" + std::to_string(letters) + "]";
  s.declared_r_noetherian = true;
  s.declared_no_lri = false;
  return s;
}

SymbolicSemigroup witness(const std::string& name) {
  static const std::map<std::string, std::string> aliases{
      {"ex-sdp", "W1"},          {"schutz-counterexample", "W3"},
      {"free", "W4"},            {"bruck-reilly", "W5"},
      {"nn-semilattice", "W6"},  {"null-chain", "W7"},
  };
  std::string key = name;
  if (auto const it = aliases.find(key); it != aliases.end()) {
    key = it->second;
  }
  if (key == "W1") return w1();
  if (key == "W2") return w2();
  if (key == "W3") return w3();
  if (key == "W4") return w4();
  if (key == "W5") return w5();
  if (key == "W6") return w6();
  if (key == "W7") return w7();
  throw std::invalid_argument("unknown witness '" + name + "'");
}

std::vector<std::string> witness_names() {
  return {"W1", "W2", "W3", "W4", "W5", "W6", "W7"};
}

}  // namespace sgp::witnesses
