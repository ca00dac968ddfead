#include "catoric/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "catoric/gf2.hpp"

namespace catoric {

namespace {

std::vector<Mono> normalize_terms(std::vector<Mono> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Mono> out;
  size_t k = 0;
  while (k < terms.size()) {
    size_t run = k + 1;
    while (run < terms.size() && terms[run] == terms[k]) ++run;
    if ((run - k) % 2) out.push_back(terms[k]);
    k = run;
  }
  return out;
}

int32_t checked_exp(int64_t v, const char* what) {
  if (v > kMaxExponent || v < -kMaxExponent) {
    throw DomainError(std::string(what) + ": exponent out of range");
  }
  return static_cast<int32_t>(v);
}

}  // namespace

Poly2::Poly2(std::vector<Mono> terms) : terms_(normalize_terms(std::move(terms))) {}

Poly2 Poly2::monomial(int32_t i, int32_t j) {
  Poly2 p;
  p.terms_.push_back({i, j});
  return p;
}

bool Poly2::has_term(int32_t i, int32_t j) const {
  Mono m{i, j};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, term_less);
  return it != terms_.end() && *it == m;
}

/* ---------- parsing ---------- */

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("parse error at byte " + std::to_string(pos) + ": " +
                      msg);
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  void ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  int64_t digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit expected");
    int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      if (v > kMaxExponent) fail("exponent exceeds 2^30");
      ++pos;
    }
    return v;
  }

  // factor := ('x'|'y') ('^' '-'? digits)?
  void factor(int64_t& i, int64_t& j) {
    char var = peek();
    ++pos;
    int64_t e = 1;
    if (peek() == '^') {
      ++pos;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos;
      }
      e = digits();
      if (neg) e = -e;
    }
    (var == 'x' ? i : j) += e;
  }

  // term := '1' | factor ('*'? factor)*
  Mono term() {
    if (peek() == '1') {
      ++pos;
      return {0, 0};
    }
    if (peek() != 'x' && peek() != 'y') fail("term expected");
    int64_t i = 0, j = 0;
    factor(i, j);
    for (;;) {
      if (peek() == '*') {
        ++pos;
        if (peek() != 'x' && peek() != 'y') fail("factor expected after '*'");
        factor(i, j);
      } else if (peek() == 'x' || peek() == 'y') {
        factor(i, j);
      } else {
        break;
      }
    }
    return {checked_exp(i, "parse"), checked_exp(j, "parse")};
  }

  Poly2 poly() {
    ws();
    if (peek() == '0') {
      ++pos;
      ws();
      if (pos != s.size()) fail("trailing input after '0'");
      return Poly2();
    }
    std::vector<Mono> terms;
    terms.push_back(term());
    for (;;) {
      ws();
      if (pos == s.size()) break;
      if (peek() != '+') fail("'+' or end of input expected");
      ++pos;
      ws();
      terms.push_back(term());
    }
    return Poly2(std::move(terms));
  }
};

void render_exp(std::string& out, char var, int32_t e) {
  out.push_back(var);
  if (e != 1) {
    out.push_back('^');
    out += std::to_string(e);
  }
}

}  // namespace

Poly2 parse(const std::string& text) { return Parser(text).poly(); }

std::string render(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Mono& t : p.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.i == 0 && t.j == 0) {
      out.push_back('1');
      continue;
    }
    if (t.i != 0) render_exp(out, 'x', t.i);
    if (t.i != 0 && t.j != 0) out.push_back('*');
    if (t.j != 0) render_exp(out, 'y', t.j);
  }
  return out;
}

/* ---------- ring operations ---------- */

Poly2 add(const Poly2& a, const Poly2& b) {
  // merge of two sorted unique sequences, dropping pairs (XOR)
  std::vector<Mono> out;
  out.reserve(a.term_count() + b.term_count());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea && ib != eb) {
    if (*ia == *ib) {
      ++ia;
      ++ib;
    } else if (term_less(*ia, *ib)) {
      out.push_back(*ia++);
    } else {
      out.push_back(*ib++);
    }
  }
  out.insert(out.end(), ia, ea);
  out.insert(out.end(), ib, eb);
  Poly2 r;
  // already sorted and unique; bypass normalize via the private-friendly path
  return Poly2(std::move(out));
}

Poly2 mul(const Poly2& a, const Poly2& b) {
  std::vector<Mono> out;
  out.reserve(a.term_count() * b.term_count());
  for (const Mono& p : a.terms()) {
    for (const Mono& q : b.terms()) {
      out.push_back({checked_exp(int64_t{p.i} + q.i, "mul"),
                     checked_exp(int64_t{p.j} + q.j, "mul")});
    }
  }
  return Poly2(std::move(out));
}

Poly2 antipode(const Poly2& p) {
  std::vector<Mono> out;
  out.reserve(p.term_count());
  for (const Mono& t : p.terms()) out.push_back({-t.i, -t.j});
  return Poly2(std::move(out));
}

Poly2 canonicalize(const Poly2& p) {
  if (p.is_zero()) throw DomainError("canonicalize: zero polynomial");
  int32_t mi = p.terms()[0].i, mj = p.terms()[0].j;
  for (const Mono& t : p.terms()) {
    mi = std::min(mi, t.i);
    mj = std::min(mj, t.j);
  }
  std::vector<Mono> out;
  out.reserve(p.term_count());
  for (const Mono& t : p.terms()) out.push_back({t.i - mi, t.j - mj});
  return Poly2(std::move(out));
}

/* ---------- division ---------- */

namespace {

struct Box {
  int32_t ilo = 0, ihi = 0, jlo = 0, jhi = 0;
};

Box bounding_box(const Poly2& p) {
  Box b{p.terms()[0].i, p.terms()[0].i, p.terms()[0].j, p.terms()[0].j};
  for (const Mono& t : p.terms()) {
    b.ilo = std::min(b.ilo, t.i);
    b.ihi = std::max(b.ihi, t.i);
    b.jlo = std::min(b.jlo, t.j);
    b.jhi = std::max(b.jhi, t.j);
  }
  return b;
}

// quotient of canonical b by canonical a, or nullopt when a does not divide b
std::optional<Poly2> div_canonical(const Poly2& b, const Poly2& a) {
  if (b.is_zero()) return Poly2();
  Box ba = bounding_box(a);
  Box bb = bounding_box(b);
  int32_t qi = bb.ihi - ba.ihi;  // quotient exponent box [0,qi] x [0,qj]
  int32_t qj = bb.jhi - ba.jhi;
  if (qi < 0 || qj < 0) return std::nullopt;
  const Mono lead = a.terms().back();  // maximal in (j,i) order
  Poly2 rem = b;
  std::vector<Mono> quot;
  while (!rem.is_zero()) {
    const Mono top = rem.terms().back();
    Mono q{top.i - lead.i, top.j - lead.j};
    if (q.i < 0 || q.i > qi || q.j < 0 || q.j > qj) return std::nullopt;
    quot.push_back(q);
    rem = add(rem, mul(a, Poly2::monomial(q.i, q.j)));
  }
  return Poly2(std::move(quot));
}

}  // namespace

bool divides(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) throw DomainError("divides: zero divisor");
  if (b.is_zero()) return true;
  return div_canonical(canonicalize(b), canonicalize(a)).has_value();
}

Poly2 div_exact(const Poly2& b, const Poly2& a) {
  if (a.is_zero()) throw DomainError("div_exact: zero divisor");
  if (b.is_zero()) return Poly2();
  Poly2 ac = canonicalize(a);
  Poly2 bc = canonicalize(b);
  auto q = div_canonical(bc, ac);
  if (!q) throw DomainError("div_exact: not divisible");
  Box xa = bounding_box(a);
  Box xb = bounding_box(b);
  Poly2 shifted = mul(*q, Poly2::monomial(xb.ilo - xa.ilo, xb.jlo - xa.jlo));
  return shifted;
}

/* ---------- gcd ---------- */

namespace {

// canonical polynomial as a vector of y-coefficients in F2[x]
std::vector<XPoly> to_ycoeffs(const Poly2& p) {
  Box b = bounding_box(p);
  std::vector<XPoly> rows(static_cast<size_t>(b.jhi) + 1);
  for (const Mono& t : p.terms()) rows[static_cast<size_t>(t.j)].flip(
      static_cast<uint32_t>(t.i));
  return rows;
}

Poly2 from_ycoeffs(const std::vector<XPoly>& rows) {
  std::vector<Mono> terms;
  for (size_t j = 0; j < rows.size(); ++j) {
    const XPoly& r = rows[j];
    for (int64_t i = 0; i <= r.degree(); ++i) {
      if (r.get(static_cast<uint32_t>(i)))
        terms.push_back({static_cast<int32_t>(i), static_cast<int32_t>(j)});
    }
  }
  return Poly2(std::move(terms));
}

struct YPoly {  // element of F2[x][y], coefficient list by y-degree
  std::vector<XPoly> c;

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int64_t ydeg() const { return static_cast<int64_t>(c.size()) - 1; }
  const XPoly& lc() const { return c.back(); }
};

YPoly ypoly_of(const Poly2& p) {
  YPoly y;
  y.c = to_ycoeffs(p);
  y.trim();
  return y;
}

YPoly scale(const YPoly& a, const XPoly& s) {
  YPoly r;
  r.c.reserve(a.c.size());
  for (const XPoly& q : a.c) r.c.push_back(q * s);
  r.trim();
  return r;
}

YPoly add_y(const YPoly& a, const YPoly& b) {
  YPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = r.c[k] ^ a.c[k];
  for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = r.c[k] ^ b.c[k];
  r.trim();
  return r;
}

// a * b_shifted_by_y^k
YPoly mul_shift(const YPoly& a, const XPoly& s, size_t yshift) {
  YPoly r;
  r.c.resize(a.c.size() + yshift);
  for (size_t k = 0; k < a.c.size(); ++k) r.c[k + yshift] = a.c[k] * s;
  r.trim();
  return r;
}

XPoly content(const YPoly& a) {
  XPoly g;
  for (const XPoly& q : a.c) g = XPoly::gcd(g, q);
  return g;
}

YPoly divide_content(const YPoly& a, const XPoly& g) {
  YPoly r;
  r.c.reserve(a.c.size());
  for (const XPoly& q : a.c) {
    if (q.is_zero()) {
      r.c.push_back(XPoly());
      continue;
    }
    auto [quot, rem] = q.divmod(g);
    if (!rem.is_zero()) throw std::logic_error("content division not exact");
    r.c.push_back(quot);
  }
  r.trim();
  return r;
}

// pseudo-remainder of a by b in y (b nonzero, ydeg a >= ydeg b on entry)
YPoly prem(YPoly a, const YPoly& b) {
  while (!a.is_zero() && a.ydeg() >= b.ydeg()) {
    size_t shift = static_cast<size_t>(a.ydeg() - b.ydeg());
    XPoly la = a.lc();
    a = add_y(scale(a, b.lc()), mul_shift(b, la, shift));
  }
  return a;
}

}  // namespace

Poly2 gcd2(const Poly2& a, const Poly2& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd2: both inputs zero");
  if (a.is_zero()) return canonicalize(b);
  if (b.is_zero()) return canonicalize(a);
  YPoly pa = ypoly_of(canonicalize(a));
  YPoly pb = ypoly_of(canonicalize(b));
  XPoly ca = content(pa);
  XPoly cb = content(pb);
  XPoly cg = XPoly::gcd(ca, cb);
  YPoly r0 = divide_content(pa, ca);
  YPoly r1 = divide_content(pb, cb);
  if (r0.ydeg() < r1.ydeg()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    YPoly r2 = prem(r0, r1);
    if (!r2.is_zero()) r2 = divide_content(r2, content(r2));
    r0 = r1;
    r1 = r2;
  }
  YPoly g = scale(r0, cg);
  return canonicalize(from_ycoeffs(g.c));
}

/* ---------- Newton polygon ---------- */

namespace {

int64_t cross(const Mono& o, const Mono& a, const Mono& b) {
  return (int64_t{a.i} - o.i) * (int64_t{b.j} - o.j) -
         (int64_t{a.j} - o.j) * (int64_t{b.i} - o.i);
}

bool lex_less(const Mono& a, const Mono& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

}  // namespace

NewtonPolygon newton(const Poly2& p) {
  if (p.is_zero()) throw DomainError("newton: zero polynomial");
  std::vector<Mono> pts = p.terms();
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  NewtonPolygon out;
  if (pts.size() == 1) {
    out.vertices = pts;
    out.dim = 0;
    return out;
  }

  // monotone chain; strict turns only, so collinear interior points drop out
  std::vector<Mono> hull(2 * pts.size());
  size_t k = 0;
  for (const Mono& q : pts) {  // lower hull
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  size_t lower = k + 1;
  for (size_t idx = pts.size() - 1; idx-- > 0;) {  // upper hull
    const Mono& q = pts[idx];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  hull.resize(k - 1);  // last point repeats the first

  if (hull.size() == 2) {
    out.dim = 1;
  } else {
    out.dim = 2;
  }
  // rotate so the lexicographically smallest vertex comes first (it is
  // pts.front(), which the chain already starts at)
  out.vertices = std::move(hull);
  return out;
}

/* ---------- directions and collinear profiles ---------- */

PrimitiveDirection make_direction(int64_t du, int64_t dv) {
  if (du == 0 && dv == 0)
    throw DomainError("make_direction: zero vector");
  int64_t g = std::gcd(du < 0 ? -du : du, dv < 0 ? -dv : dv);
  du /= g;
  dv /= g;
  if (du < 0 || (du == 0 && dv < 0)) {
    du = -du;
    dv = -dv;
  }
  return {static_cast<int32_t>(du), static_cast<int32_t>(dv)};
}

std::pair<int32_t, int32_t> display_axis(const PrimitiveDirection& d) {
  if (d.v > 0 || (d.v == 0 && d.u > 0)) return {d.u, d.v};
  return {-d.u, -d.v};
}

std::optional<CollinearProfile> collinear_profile(const Poly2& p) {
  NewtonPolygon hull = newton(p);
  if (hull.dim == 2) return std::nullopt;
  CollinearProfile prof;
  if (hull.dim == 0) {
    prof.direction = {1, 0};
    prof.t = {1};
    return prof;
  }
  Mono e1 = hull.vertices[0];
  Mono e2 = hull.vertices[1];
  prof.direction = make_direction(int64_t{e2.i} - e1.i, int64_t{e2.j} - e1.j);
  // read from the endpoint that steps toward the other along the canonical sign
  Mono start = e1;
  int64_t su = prof.direction.u, sv = prof.direction.v;
  int64_t len;
  if (su != 0) {
    len = (int64_t{e2.i} - e1.i) / su;
  } else {
    len = (int64_t{e2.j} - e1.j) / sv;
  }
  if (len < 0) {
    start = e2;
    len = -len;
  }
  for (int64_t s = 0; s <= len; ++s) {
    prof.t.push_back(p.has_term(static_cast<int32_t>(start.i + s * su),
                                static_cast<int32_t>(start.j + s * sv))
                         ? 1
                         : 0);
  }
  return prof;
}

}  // namespace catoric
