#include "ebelyi/triples.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "ebelyi/error.hpp"
#include "ebelyi/triangle.hpp"

namespace eb {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw Error(ErrorKind::ParseError, "images do not form a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(static_cast<size_t>(d));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::parse(const std::string& text, int d) {
  if (d < 1) throw Error(ErrorKind::ParseError, "degree must be positive");
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<size_t>(d), 0);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) || !s.empty()) s += ch;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty() || s == "id" || s == "()") return Permutation(img);
  size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw Error(ErrorKind::ParseError, "expected '(' in \"" + text + "\"");
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unbalanced '(' in \"" + text + "\"");
    std::string body = s.substr(pos + 1, close - pos - 1);
    for (char& ch : body)
      if (ch == ',') ch = ' ';
    std::istringstream in(body);
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw Error(ErrorKind::ParseError, "bad entry \"" + tok + "\" in \"" + text + "\"");
      int v = std::stoi(tok);
      if (v < 1 || v > d)
        throw Error(ErrorKind::ParseError, "entry " + tok + " out of range 1.." + std::to_string(d));
      if (used[v - 1]) throw Error(ErrorKind::ParseError, "entry " + tok + " repeated in \"" + text + "\"");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return Permutation(img);
}

Permutation Permutation::transposition(int d, int i, int j) {
  Permutation p = identity(d);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int x = i; !seen[x]; x = img_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

long Permutation::order() const {
  long o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<long>(c.size()));
  return o;
}

int Permutation::num_cycles() const { return static_cast<int>(cycles().size()); }

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s.empty() ? "id" : s;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  std::vector<int> v(static_cast<size_t>(f.degree()));
  for (int i = 0; i < f.degree(); ++i) v[i] = f(g(i));
  return Permutation(std::move(v));
}

Permutation then(const Permutation& p, const Permutation& q) { return compose(q, p); }

Permutation power(const Permutation& p, long k) {
  if (k < 0) return power(p.inverse(), -k);
  Permutation r = Permutation::identity(p.degree()), b = p;
  while (k > 0) {
    if (k & 1) r = compose(b, r);
    k >>= 1;
    if (k) b = compose(b, b);
  }
  return r;
}

std::array<int, 3> case_orders(Case c) {
  switch (c) {
    case Case::k333: return {3, 3, 3};
    case Case::k236: return {2, 3, 6};
    case Case::k244: return {2, 4, 4};
  }
  return {0, 0, 0};
}

std::string case_name(Case c) {
  auto o = case_orders(c);
  return "(" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "," + std::to_string(o[2]) + ")";
}

std::optional<Case> case_from_orders(int a, int b, int c) {
  for (Case k : {Case::k333, Case::k236, Case::k244}) {
    auto o = case_orders(k);
    if (o[0] == a && o[1] == b && o[2] == c) return k;
  }
  return std::nullopt;
}

Case parse_case(const std::string& text) {
  std::vector<int> v;
  for (char ch : text)
    if (std::isdigit(static_cast<unsigned char>(ch))) v.push_back(ch - '0');
  if (v.size() == 3) {
    if (auto c = case_from_orders(v[0], v[1], v[2])) return *c;
    std::array<int, 3> s{v[0], v[1], v[2]};
    std::sort(s.begin(), s.end());
    for (Case k : {Case::k333, Case::k236, Case::k244})
      if (case_orders(k) == s)
        throw Error(ErrorKind::NotEuclidean, "orders must be written as " + case_name(k) +
                                                 "; relabel the triple so that the orders appear in this order");
  }
  throw Error(ErrorKind::NotEuclidean, "not a Euclidean case: \"" + text + "\"");
}

char role_char(Role r) { return static_cast<char>('a' + static_cast<int>(r)); }

const Permutation& PermutationTriple::operator[](Role r) const {
  switch (r) {
    case Role::a: return a;
    case Role::b: return b;
    case Role::c: return c;
  }
  return a;
}

PermutationTriple PermutationTriple::inverted() const { return {a.inverse(), b.inverse(), c.inverse()}; }

std::string PermutationTriple::to_string() const {
  return a.to_string() + " " + b.to_string() + " " + c.to_string();
}

bool PermutationTriple::operator<(const PermutationTriple& o) const {
  if (!(a == o.a)) return a < o.a;
  if (!(b == o.b)) return b < o.b;
  return c < o.c;
}

PermutationTriple PermutationTriple::parse(const std::string& sa, const std::string& sb,
                                           const std::string& sc, int d) {
  return {Permutation::parse(sa, d), Permutation::parse(sb, d), Permutation::parse(sc, d)};
}

bool is_transitive(const PermutationTriple& t) {
  int d = t.degree();
  std::vector<char> seen(static_cast<size_t>(d), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Permutation* p : {&t.a, &t.b, &t.c}) {
      int w = (*p)(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == d;
}

const PermutationTriple& validate(const PermutationTriple& t) {
  if (t.a.degree() != t.b.degree() || t.b.degree() != t.c.degree())
    throw Error(ErrorKind::DegreeMismatch, "permutations have degrees " + std::to_string(t.a.degree()) + ", " +
                                               std::to_string(t.b.degree()) + ", " + std::to_string(t.c.degree()));
  if (t.degree() < 1) throw Error(ErrorKind::DegreeMismatch, "empty permutations");
  if (!then(then(t.a, t.b), t.c).is_identity())
    throw Error(ErrorKind::RelationViolated,
                "applying sigma_a, then sigma_b, then sigma_c is not the identity (use --invert for the opposite "
                "convention)");
  if (!is_transitive(t)) throw Error(ErrorKind::NotTransitive, "the triple generates an intransitive group");
  return t;
}

Passport passport(const PermutationTriple& t, std::optional<Case> c) {
  Passport p;
  const Permutation* ps[3] = {&t.a, &t.b, &t.c};
  int d = t.degree();
  int e_sum = 0;
  for (int s = 0; s < 3; ++s) {
    p.orders[s] = static_cast<int>(ps[s]->order());
    p.cycle_types[s] = ps[s]->cycle_type();
    e_sum += d - static_cast<int>(p.cycle_types[s].size());
  }
  std::string ord = "(" + std::to_string(p.orders[0]) + "," + std::to_string(p.orders[1]) + "," +
                    std::to_string(p.orders[2]) + ")";
  if (!c) {
    c = case_from_orders(p.orders[0], p.orders[1], p.orders[2]);
    if (!c) {
      std::array<int, 3> s = p.orders;
      std::sort(s.begin(), s.end());
      for (Case k : {Case::k333, Case::k236, Case::k244})
        if (case_orders(k) == s)
          throw Error(ErrorKind::NotEuclidean, "orders " + ord + " must be relabeled to " + case_name(k));
      throw Error(ErrorKind::NotEuclidean, "orders " + ord + " (give the Euclidean case explicitly if they are "
                                               "proper divisors of one)");
    }
  }
  auto co = case_orders(*c);
  for (int s = 0; s < 3; ++s)
    if (co[s] % p.orders[s] != 0)
      throw Error(ErrorKind::NotEuclidean, "orders " + ord + " do not divide " + case_name(*c));
  p.euclidean_case = *c;
  p.genus = 1 - d + e_sum / 2;
  if (e_sum % 2 != 0) throw Error(ErrorKind::InternalInconsistency, "odd ramification total");
  return p;
}

PermutationTriple conjugate(const PermutationTriple& t, const Permutation& tau) {
  if (tau.degree() != t.degree()) throw Error(ErrorKind::DegreeMismatch, "conjugator has wrong degree");
  Permutation ti = tau.inverse();
  return {compose(tau, compose(t.a, ti)), compose(tau, compose(t.b, ti)), compose(tau, compose(t.c, ti))};
}

Preprocessed preprocess(const PermutationTriple& t, Case kase) {
  TriangleContext ctx = context(kase);
  int d = t.degree();
  SublatticeBasis basis = translation_basis(t, ctx);
  int r = rotation_index(basis, d, ctx.orders[2]);
  for (Role role : {Role::c, Role::b, Role::a}) {
    int s = ctx.order(role);
    if (s % r != 0) continue;
    size_t len = static_cast<size_t>(s / r);
    int best = -1;
    for (const auto& cyc : t[role].cycles()) {
      if (cyc.size() != len) continue;
      if (cyc[0] == 0) {
        best = 0;
        break;
      }
      if (best < 0 || cyc[0] < best) best = cyc[0];
    }
    if (best < 0) continue;
    Preprocessed out;
    out.r = r;
    out.side = role;
    out.conjugator = Permutation::transposition(d, 1, best + 1);
    out.triple = best == 0 ? t : conjugate(t, out.conjugator);
    return out;
  }
  throw Error(ErrorKind::InternalInconsistency, "no cycle of length s/r for rotation index " + std::to_string(r));
}

namespace {

// Relabel by BFS from `start`, visiting a(v) then b(v). Returns false if
// not every point is reached.
bool relabel_from(const PermutationTriple& t, int start, std::vector<int>& ka, std::vector<int>& kb) {
  int d = t.degree();
  std::vector<int> label(static_cast<size_t>(d), -1), order;
  order.reserve(static_cast<size_t>(d));
  label[start] = 0;
  order.push_back(start);
  for (size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    for (const Permutation* p : {&t.a, &t.b}) {
      int w = (*p)(v);
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) < d) return false;
  ka.resize(static_cast<size_t>(d));
  kb.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    ka[i] = label[t.a(order[i])];
    kb[i] = label[t.b(order[i])];
  }
  return true;
}

}  // namespace

std::optional<PermutationTriple> canonical_form(const PermutationTriple& t) {
  int d = t.degree();
  std::vector<int> best_a, best_b, ka, kb;
  bool have = false;
  for (int s = 0; s < d; ++s) {
    if (!relabel_from(t, s, ka, kb)) return std::nullopt;
    if (!have || std::tie(ka, kb) < std::tie(best_a, best_b)) {
      best_a = ka;
      best_b = kb;
      have = true;
    }
  }
  Permutation a(best_a), b(best_b);
  // c is forced by: apply a, then b, then c = identity.
  Permutation c = then(a, b).inverse();
  return PermutationTriple{a, b, c};
}

namespace {

// Representatives of conjugacy classes of permutations whose cycle lengths divide s.
std::vector<Permutation> class_representatives(int d, int s) {
  std::vector<Permutation> out;
  std::vector<int> parts;
  std::vector<int> divs;
  for (int L = 1; L <= s; ++L)
    if (s % L == 0) divs.push_back(L);
  // Partitions of d into parts from divs, parts non-increasing.
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      std::vector<int> img(static_cast<size_t>(d));
      int pos = 0;
      for (int L : parts) {
        for (int i = 0; i < L; ++i) img[pos + i] = pos + (i + 1) % L;
        pos += L;
      }
      out.emplace_back(img);
      return;
    }
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
      int L = *it;
      if (L > maxpart || L > rem) continue;
      parts.push_back(L);
      self(self, rem - L, L);
      parts.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

// All permutations of {0..d-1} whose cycle lengths divide s.
std::vector<Permutation> all_with_order_dividing(int d, int s) {
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<size_t>(d), -1);
  std::vector<char> used(static_cast<size_t>(d), 0);
  std::vector<int> divs;
  for (int L = 1; L <= s; ++L)
    if (s % L == 0) divs.push_back(L);
  auto rec = [&](auto&& self) -> void {
    int first = -1;
    for (int i = 0; i < d; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.emplace_back(img);
      return;
    }
    used[first] = 1;
    std::vector<int> cyc{first};
    // Extend the cycle through `first` to each admissible length.
    auto grow = [&](auto&& g) -> void {
      int L = static_cast<int>(cyc.size());
      if (std::find(divs.begin(), divs.end(), L) != divs.end()) {
        for (int i = 0; i < L; ++i) img[cyc[i]] = cyc[(i + 1) % L];
        self(self);
        for (int i = 0; i < L; ++i) img[cyc[i]] = -1;
      }
      if (L >= s) return;
      for (int v = first + 1; v < d; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        cyc.push_back(v);
        g(g);
        cyc.pop_back();
        used[v] = 0;
      }
    };
    grow(grow);
    used[first] = 0;
  };
  rec(rec);
  return out;
}

bool order_divides(const Permutation& p, int s) { return s % p.order() == 0; }

void collect(const Permutation& a, const std::vector<Permutation>& bs, size_t lo, size_t hi, int c,
             std::set<PermutationTriple>& out) {
  for (size_t k = lo; k < hi; ++k) {
    const Permutation& b = bs[k];
    Permutation cc = then(a, b).inverse();
    if (!order_divides(cc, c)) continue;
    PermutationTriple t{a, b, cc};
    if (auto cf = canonical_form(t)) out.insert(*cf);
  }
}

}  // namespace

std::vector<PermutationTriple> enumerate_triples_serial(int d, Case kase) {
  auto o = case_orders(kase);
  std::set<PermutationTriple> found;
  auto bs = all_with_order_dividing(d, o[1]);
  for (const auto& a : class_representatives(d, o[0])) collect(a, bs, 0, bs.size(), o[2], found);
  return {found.begin(), found.end()};
}

std::vector<PermutationTriple> enumerate_triples(int d, Case kase) {
  auto o = case_orders(kase);
  auto as = class_representatives(d, o[0]);
  auto bs = all_with_order_dividing(d, o[1]);
  std::set<PermutationTriple> found;
  const long chunk = 256;
  const long nb = static_cast<long>(bs.size());
  const long nchunks = (nb + chunk - 1) / chunk;
  const long total = static_cast<long>(as.size()) * nchunks;
#pragma omp parallel
  {
    std::set<PermutationTriple> local;
#pragma omp for schedule(dynamic)
    for (long job = 0; job < total; ++job) {
      long ia = job / nchunks, ic = job % nchunks;
      size_t lo = static_cast<size_t>(ic * chunk);
      size_t hi = static_cast<size_t>(std::min(nb, (ic + 1) * chunk));
      collect(as[ia], bs, lo, hi, o[2], local);
    }
#pragma omp critical
    found.insert(local.begin(), local.end());
  }
  return {found.begin(), found.end()};
}

}  // namespace eb
