#include "sgp/term.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace sgp {

int compare(const Term& a, const Term& b) {
  if (a.tag != b.tag) {
    return a.tag < b.tag ? -1 : 1;
  }
  if (a.ints != b.ints) {
    return a.ints < b.ints ? -1 : 1;
  }
  auto const n = std::min(a.subs.size(), b.subs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a.subs[i], b.subs[i]); c != 0) {
      return c;
    }
  }
  if (a.subs.size() != b.subs.size()) {
    return a.subs.size() < b.subs.size() ? -1 : 1;
  }
  return 0;
}

bool Term::operator==(const Term& other) const {
  return compare(*this, other) == 0;
}

bool Term::operator<(const Term& other) const {
  return compare(*this, other) < 0;
}

std::size_t hash_value(const Term& t) {
  std::size_t h = static_cast<std::size_t>(t.tag) * 0x9e3779b97f4a7c15ULL;
  for (auto v : t.ints) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
         + (h >> 2);
  }
  for (auto const& s : t.subs) {
    h ^= hash_value(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void render(const Term& t, std::ostringstream& out) {
  switch (t.tag) {
    case Tag::Fin:
      out << 'e' << t.ints[0];
      break;
    case Tag::One:
      out << '1';
      break;
    case Tag::Zero:
      out << '0';
      break;
    case Tag::XPow:
      if (t.ints[0] == 1) {
        out << 'x';
      } else {
        out << "x^" << t.ints[0];
      }
      break;
    case Tag::AElem:
      out << "a_" << t.ints[0];
      break;
    case Tag::Word: {
      static constexpr char kLetters[] = "xyzuvw";
      for (auto l : t.ints) {
        if (l >= 0 && l < 6) {
          out << kLetters[l];
        } else {
          out << "g" << l;
        }
      }
      break;
    }
    case Tag::Tup: {
      out << '(';
      for (std::size_t i = 0; i < t.ints.size(); ++i) {
        if (i) out << ',';
        out << t.ints[i];
      }
      out << ')';
      break;
    }
    case Tag::Pair:
      out << '(';
      render(t.subs[0], out);
      out << ',';
      render(t.subs[1], out);
      out << ')';
      break;
    case Tag::Set: {
      out << '{';
      for (std::size_t i = 0; i < t.subs.size(); ++i) {
        if (i) out << ',';
        render(t.subs[i], out);
      }
      out << '}';
      break;
    }
    case Tag::Triple:
      out << '(';
      render(t.subs[0], out);
      out << ',';
      render(t.subs[1], out);
      out << ',';
      render(t.subs[2], out);
      out << ')';
      break;
    case Tag::Seq: {
      out << '(';
      for (std::size_t i = 0; i < t.subs.size(); ++i) {
        if (i) out << ',';
        render(t.subs[i], out);
      }
      out << ')';
      break;
    }
    case Tag::Comp:
      if (t.ints.empty()) {
        out << '[';
        render(t.subs[0], out);
        out << '|';
        render(t.subs[1], out);
        out << ']';
      } else {
        out << t.ints[0] << ':';
        render(t.subs[0], out);
      }
      break;
    case Tag::Rees:
      out << '(' << t.ints[0] << '|';
      render(t.subs[0], out);
      out << '|' << t.ints[1] << ')';
      break;
    case Tag::BRt:
      out << '(' << t.ints[0] << ',';
      render(t.subs[0], out);
      out << ',' << t.ints[1] << ')';
      break;
  }
}

}  // namespace

std::string Term::str() const {
  std::ostringstream out;
  render(*this, out);
  return out.str();
}

Term Term::fin(std::int64_t i) { return Term{Tag::Fin, {i}, {}}; }
Term Term::one() { return Term{Tag::One, {}, {}}; }
Term Term::zero() { return Term{Tag::Zero, {}, {}}; }
Term Term::xpow(std::int64_t n) { return Term{Tag::XPow, {n}, {}}; }
Term Term::aelem(std::int64_t i) { return Term{Tag::AElem, {i}, {}}; }

Term Term::word(std::vector<std::int64_t> letters) {
  return Term{Tag::Word, std::move(letters), {}};
}

Term Term::tup(std::vector<std::int64_t> values) {
  return Term{Tag::Tup, std::move(values), {}};
}

Term Term::pair(Term s, Term t) {
  Term r{Tag::Pair, {}, {}};
  r.subs.push_back(std::move(s));
  r.subs.push_back(std::move(t));
  return r;
}

Term Term::set(std::vector<Term> members) {
  // Pairs sort by (serialized first, serialized second); anything else by
  // its own serialization.
  auto key = [](const Term& t) -> std::pair<std::string, std::string> {
    if (t.tag == Tag::Pair) {
      return {t.subs[0].str(), t.subs[1].str()};
    }
    return {t.str(), std::string()};
  };
  std::stable_sort(members.begin(), members.end(),
                   [&](const Term& a, const Term& b) { return key(a) < key(b); });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Term{Tag::Set, {}, std::move(members)};
}

Term Term::triple(Term s, Term p, Term t) {
  Term r{Tag::Triple, {}, {}};
  r.subs.push_back(std::move(s));
  r.subs.push_back(std::move(p));
  r.subs.push_back(std::move(t));
  return r;
}

Term Term::seq(std::vector<Term> entries) {
  return Term{Tag::Seq, {}, std::move(entries)};
}

Term Term::comp(std::int64_t factor, Term value) {
  Term r{Tag::Comp, {factor}, {}};
  r.subs.push_back(std::move(value));
  return r;
}

Term Term::comp_keyed(Term key, Term value) {
  Term r{Tag::Comp, {}, {}};
  r.subs.push_back(std::move(key));
  r.subs.push_back(std::move(value));
  return r;
}

Term Term::rees(std::int64_t i, Term s, std::int64_t j) {
  Term r{Tag::Rees, {i, j}, {}};
  r.subs.push_back(std::move(s));
  return r;
}

Term Term::br(std::int64_t i, Term a, std::int64_t j) {
  Term r{Tag::BRt, {i, j}, {}};
  r.subs.push_back(std::move(a));
  return r;
}

}  // namespace sgp
