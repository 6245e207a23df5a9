#include "chernlat/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace chernlat {

std::string to_string(SplitStatus s) {
  switch (s) {
    case SplitStatus::Split: return "split";
    case SplitStatus::NonSplit: return "nonsplit";
    case SplitStatus::Unknown: return "unknown";
  }
  return {};
}

BundleDescriptor direct_sum(const Divisor& L, const Divisor& M) {
  BundleDescriptor b{L.surface(), DirectSum{L, M}};
  validate(b);
  return b;
}

BundleDescriptor extension(const Divisor& sub, const Divisor& quot, Int degZ, SplitStatus split) {
  BundleDescriptor b{sub.surface(), Extension{sub, quot, degZ, split}};
  validate(b);
  return b;
}

BundleDescriptor tangent(const Surface& s) {
  BundleDescriptor b{s, Tangent{}};
  validate(b);
  return b;
}

BundleDescriptor tangent_twist(const Surface& s, Int k) {
  BundleDescriptor b{s, TangentTwist{k}};
  validate(b);
  return b;
}

BundleDescriptor blowup_extension(const Divisor& c1, Int c2, Int points) {
  BundleDescriptor b{c1.surface(), BlowUpExtension{c1, c2, points}};
  validate(b);
  return b;
}

namespace {

void same(const Surface& s, const Divisor& d) {
  if (d.surface() != s)
    throw SurfaceMismatch("class on " + d.surface().selector() + " in a bundle on " + s.selector());
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Every class the shape carries, in a fixed order.
std::vector<Divisor> classes_of(const Shape& shape) {
  return std::visit(
      overloaded{
          [](const DirectSum& s) { return std::vector<Divisor>{s.L, s.M}; },
          [](const Extension& s) { return std::vector<Divisor>{s.sub, s.quot}; },
          [](const BlowUpExtension& s) { return std::vector<Divisor>{s.c1}; },
          [](const auto&) { return std::vector<Divisor>{}; },
      },
      shape);
}

Shape with_classes(const Shape& shape, const std::vector<Divisor>& c) {
  return std::visit(
      overloaded{
          [&](const DirectSum&) -> Shape { return DirectSum{c[0], c[1]}; },
          [&](const Extension& s) -> Shape { return Extension{c[0], c[1], s.degZ, s.split}; },
          [&](const BlowUpExtension& s) -> Shape { return BlowUpExtension{c[0], s.c2, s.points}; },
          [&](const auto& s) -> Shape { return s; },
      },
      shape);
}

std::vector<Int> flat(const std::vector<Divisor>& cs) {
  std::vector<Int> out;
  for (const auto& d : cs) out.insert(out.end(), d.coeffs().begin(), d.coeffs().end());
  return out;
}

// Sort the E-columns of a tuple of Del Pezzo classes jointly.
std::vector<Divisor> sort_columns(const std::vector<Divisor>& cs) {
  const Surface& s = cs.front().surface();
  const std::size_t n = s.rank();
  std::vector<std::vector<Int>> cols;
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Int> col;
    for (const auto& d : cs) col.push_back(d[j]);
    cols.push_back(std::move(col));
  }
  std::sort(cols.begin(), cols.end());
  std::vector<Divisor> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::vector<Int> c{cs[i][0]};
    for (const auto& col : cols) c.push_back(col[i]);
    out.emplace_back(s, std::move(c));
  }
  return out;
}

std::vector<Divisor> sorted_if_sum(const Shape& shape, std::vector<Divisor> cs) {
  if (std::holds_alternative<DirectSum>(shape) && cs[1] < cs[0]) std::swap(cs[0], cs[1]);
  return cs;
}

}  // namespace

void validate(const BundleDescriptor& b) {
  for (const auto& d : classes_of(b.shape)) same(b.surface, d);
  if (auto* e = std::get_if<Extension>(&b.shape); e && e->degZ < 0)
    throw InvalidInput("degZ must be non-negative");
  if (auto* u = std::get_if<BlowUpExtension>(&b.shape); u && u->points < 0)
    throw InvalidInput("number of blown-up points must be non-negative");
  if ((std::holds_alternative<Tangent>(b.shape) || std::holds_alternative<TangentTwist>(b.shape)) &&
      !b.surface.is_plane())
    throw InvalidInput("the tangent shape is only available on p2");
}

BundleDescriptor canonical(const BundleDescriptor& in) {
  validate(in);
  BundleDescriptor b = in;
  if (auto* e = std::get_if<Extension>(&b.shape); e && e->degZ == 0 && e->split == SplitStatus::Split)
    b.shape = DirectSum{e->sub, e->quot};
  if (auto* t = std::get_if<TangentTwist>(&b.shape); t && t->k == 0) b.shape = Tangent{};

  auto cs = classes_of(b.shape);
  if (cs.empty()) return b;

  std::vector<std::vector<Divisor>> images;
  std::vector<std::vector<Divisor>> orders{cs};
  if (std::holds_alternative<DirectSum>(b.shape)) orders.push_back({cs[1], cs[0]});
  const Surface& s = b.surface;
  for (const auto& o : orders) {
    if (s.is_del_pezzo()) {
      images.push_back(sorted_if_sum(b.shape, sort_columns(o)));
    } else if (s.is_hirzebruch() && s.parameter() == 0) {
      images.push_back(sorted_if_sum(b.shape, o));
      std::vector<Divisor> swapped;
      for (const auto& d : o) swapped.emplace_back(s, std::vector<Int>{d[1], d[0]});
      images.push_back(sorted_if_sum(b.shape, swapped));
    } else {
      images.push_back(sorted_if_sum(b.shape, o));
    }
  }
  // On Hirzebruch(0) prefer c1 = aH + bF with a <= b.
  if (s.is_hirzebruch() && s.parameter() == 0) {
    auto c1_of = [&](const std::vector<Divisor>& c) {
      return std::holds_alternative<BlowUpExtension>(b.shape) ? c[0] : c[0] + c[1];
    };
    std::vector<std::vector<Divisor>> keep;
    for (auto& im : images) {
      Divisor c1 = c1_of(im);
      if (c1[0] <= c1[1]) keep.push_back(im);
    }
    images = std::move(keep);
  }
  // Ties on Hirzebruch(0) go to the H-heavy form (ext(2H, H+3F) over
  // ext(2F, 3H+F)); elsewhere the smallest image wins.
  auto less = [](const auto& x, const auto& y) { return flat(x) < flat(y); };
  auto best = (s.is_hirzebruch() && s.parameter() == 0)
                  ? std::max_element(images.begin(), images.end(), less)
                  : std::min_element(images.begin(), images.end(), less);
  b.shape = with_classes(b.shape, *best);
  return b;
}

ChernData make_chern(const Divisor& c1, Int c2) {
  Int sq = self_intersection(c1);
  Int c2p1 = checked::add(c2, 1);
  return ChernData{c1, c2, sq, checked::sub(checked::mul(c2p1, c2p1), sq)};
}

ChernData chern(const BundleDescriptor& b) {
  validate(b);
  const Surface& s = b.surface;
  return std::visit(
      overloaded{
          [](const DirectSum& x) { return make_chern(x.L + x.M, intersect(x.L, x.M)); },
          [](const Extension& x) {
            return make_chern(x.sub + x.quot, checked::add(intersect(x.sub, x.quot), x.degZ));
          },
          [&](const Tangent&) { return make_chern(Divisor(s, {3}), 3); },
          [&](const TangentTwist& x) {
            return twist_chern(make_chern(Divisor(s, {3}), 3), Divisor(s, {x.k}));
          },
          [](const BlowUpExtension& x) { return make_chern(x.c1, x.c2); },
      },
      b.shape);
}

ChernData twist_chern(const ChernData& c, const Divisor& D) {
  Divisor c1 = c.c1 + 2 * D;
  Int c2 = checked::add(checked::add(c.c2, intersect(c.c1, D)), self_intersection(D));
  return make_chern(c1, c2);
}

BundleDescriptor twist(const BundleDescriptor& b, const Divisor& D) {
  validate(b);
  same(b.surface, D);
  BundleDescriptor out = b;
  if (std::holds_alternative<Tangent>(out.shape)) out.shape = TangentTwist{0};
  std::visit(overloaded{
                 [&](DirectSum& x) { x.L += D; x.M += D; },
                 [&](Extension& x) { x.sub += D; x.quot += D; },
                 [](Tangent&) {},
                 [&](TangentTwist& x) { x.k = checked::add(x.k, D[0]); },
                 [&](BlowUpExtension& x) {
                   auto c = twist_chern(make_chern(x.c1, x.c2), D);
                   x.c1 = c.c1;
                   x.c2 = c.c2;
                 },
             },
             out.shape);
  return out;
}

Int rank2_chi(const ChernData& c) {
  Int t = checked::sub(checked::sub(c.c1_sq, checked::mul(2, c.c2)),
                       intersect(c.c1, canonical_class(c.c1.surface())));
  if (t % 2 != 0) throw ParityViolation("c1^2 - 2c2 - c1.K is odd");
  return 2 + t / 2;
}

bool kleiman_ok(const ChernData& c) { return 0 < c.c2 && c.c2 < c.c1_sq; }
bool ballico_ok(const ChernData& c) { return c.delta >= 0; }
bool bogomolov_unstable(const ChernData& c) { return c.c1_sq > checked::mul(4, c.c2); }

AmpleReport numeric_ample_necessary(const BundleDescriptor& in) {
  const BundleDescriptor b = canonical(in);
  const ChernData c = chern(b);
  AmpleReport r;
  r.curve_degree = true;
  for (const auto& g : cone_generators(b.surface))
    if (intersect(c.c1, g) < 2) r.curve_degree = false;
  if (auto* s = std::get_if<DirectSum>(&b.shape)) {
    r.summands_ample = is_ample(s->L) && is_ample(s->M);
    r.exact = true;
  }
  r.kleiman = kleiman_ok(c);
  r.ballico = ballico_ok(c);
  return r;
}

// ---- text forms -----------------------------------------------------------

std::string format_bundle(const BundleDescriptor& b) {
  return std::visit(
      overloaded{
          [](const DirectSum& x) { return "sum(" + format_divisor(x.L) + ", " + format_divisor(x.M) + ")"; },
          [](const Extension& x) {
            return "ext(" + format_divisor(x.sub) + ", " + format_divisor(x.quot) +
                   "; degZ=" + std::to_string(x.degZ) + "; " + to_string(x.split) + ")";
          },
          [](const Tangent&) { return std::string("tangent"); },
          [](const TangentTwist& x) { return "tangent(" + std::to_string(x.k) + ")"; },
          [](const BlowUpExtension& x) {
            return "blowup(" + format_divisor(x.c1) + "; c2=" + std::to_string(x.c2) +
                   "; points=" + std::to_string(x.points) + ")";
          },
      },
      b.shape);
}

namespace {

std::string line_bundle(const Divisor& d) {
  if (d.surface().is_plane()) return "O(" + std::to_string(d[0]) + ")";
  return "[" + format_divisor(d) + "]";
}

}  // namespace

std::string bracket_notation(const BundleDescriptor& b) {
  return std::visit(
      overloaded{
          [](const DirectSum& x) {
            if (x.L == x.M) return line_bundle(x.L) + "⊕2";
            return line_bundle(x.L) + "⊕" + line_bundle(x.M);
          },
          [](const Extension& x) {
            std::string q = x.degZ == 0 ? line_bundle(x.quot) : "I_Z⊗" + line_bundle(x.quot);
            std::string tag = x.split == SplitStatus::NonSplit ? ", non-split"
                              : x.split == SplitStatus::Split ? ", split"
                                                              : "";
            return "0→" + line_bundle(x.sub) + "→E→" + q + "→0 (deg Z=" + std::to_string(x.degZ) + tag + ")";
          },
          [](const Tangent&) { return std::string("T"); },
          [](const TangentTwist& x) { return "T(" + std::to_string(x.k) + ")"; },
          [](const BlowUpExtension& x) {
            return "blow-up bundle c1=" + format_divisor(x.c1) + ", c2=" + std::to_string(x.c2) + " (" +
                   std::to_string(x.points) + (x.points == 1 ? " point)" : " points)");
          },
      },
      b.shape);
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(std::string_view tok) {
    ws();
    if (text.substr(pos).starts_with(tok)) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) throw ParseError("expected '" + std::string(tok) + "'", pos);
  }
  // Raw text up to (not including) the next delimiter among `delims`.
  std::pair<std::string_view, std::size_t> until(std::string_view delims) {
    ws();
    std::size_t start = pos;
    while (pos < text.size() && delims.find(text[pos]) == std::string_view::npos) ++pos;
    if (pos == text.size()) throw ParseError("unterminated argument", pos);
    return {text.substr(start, pos - start), start};
  }
  Int integer() {
    ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    Int v = 0;
    const char* b = text.data() + start + (text[start] == '+' ? 1 : 0);
    auto [p, ec] = std::from_chars(b, text.data() + pos, v);
    if (ec != std::errc() || p != text.data() + pos) throw ParseError("expected an integer", start);
    return v;
  }
  void end() {
    ws();
    if (pos != text.size()) throw ParseError("trailing input", pos);
  }
};

Divisor divisor_at(std::string_view raw, std::size_t offset, const Surface& s) {
  try {
    return parse_divisor(raw, s);
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad divisor '") + std::string(raw) + "'", offset + e.position());
  }
}

}  // namespace

BundleDescriptor parse_bundle(std::string_view text, const Surface& s) {
  Cursor c{text};
  BundleDescriptor out{s, Tangent{}};
  if (c.eat("sum")) {
    c.expect("(");
    auto [a, ao] = c.until(",");
    c.expect(",");
    auto [m, mo] = c.until(")");
    c.expect(")");
    out.shape = DirectSum{divisor_at(a, ao, s), divisor_at(m, mo, s)};
  } else if (c.eat("ext")) {
    c.expect("(");
    auto [a, ao] = c.until(",");
    c.expect(",");
    auto [m, mo] = c.until(";");
    c.expect(";");
    c.expect("degZ");
    c.expect("=");
    Int z = c.integer();
    SplitStatus st = SplitStatus::Unknown;
    if (c.eat(";")) {
      if (c.eat("nonsplit")) st = SplitStatus::NonSplit;
      else if (c.eat("split")) st = SplitStatus::Split;
      else if (c.eat("unknown")) st = SplitStatus::Unknown;
      else throw ParseError("expected split, nonsplit or unknown", c.pos);
    }
    c.expect(")");
    out.shape = Extension{divisor_at(a, ao, s), divisor_at(m, mo, s), z, st};
  } else if (c.eat("tangent")) {
    if (c.eat("(")) {
      Int k = c.integer();
      c.expect(")");
      out.shape = TangentTwist{k};
    }
  } else if (c.eat("blowup")) {
    c.expect("(");
    auto [a, ao] = c.until(";");
    c.expect(";");
    c.expect("c2");
    c.expect("=");
    Int c2 = c.integer();
    c.expect(";");
    c.expect("points");
    c.expect("=");
    Int p = c.integer();
    c.expect(")");
    out.shape = BlowUpExtension{divisor_at(a, ao, s), c2, p};
  } else {
    c.ws();
    throw ParseError("expected sum, ext, tangent or blowup", c.pos);
  }
  c.end();
  try {
    validate(out);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0);
  }
  return out;
}

}  // namespace chernlat
