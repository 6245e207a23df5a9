#include "chernlat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>

namespace chernlat::cli {

// ---- JSON -------------------------------------------------------------------

Json to_json(const Divisor& d) {
  Json j;
  j["surface"] = d.surface().selector();
  j["coeffs"] = std::vector<Int>(d.coeffs().begin(), d.coeffs().end());
  return j;
}

Json to_json(const BundleDescriptor& b) {
  Json j;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DirectSum>) {
          j["shape"] = "sum";
          j["L"] = to_json(x.L);
          j["M"] = to_json(x.M);
        } else if constexpr (std::is_same_v<T, Extension>) {
          j["shape"] = "ext";
          j["sub"] = to_json(x.sub);
          j["quot"] = to_json(x.quot);
          j["degZ"] = x.degZ;
          j["split"] = to_string(x.split);
        } else if constexpr (std::is_same_v<T, Tangent>) {
          j["shape"] = "tangent";
          j["twist"] = 0;
        } else if constexpr (std::is_same_v<T, TangentTwist>) {
          j["shape"] = "tangent";
          j["twist"] = x.k;
        } else {
          j["shape"] = "blowup";
          j["c1"] = to_json(x.c1);
          j["c2"] = x.c2;
          j["points"] = x.points;
        }
      },
      b.shape);
  j["text"] = format_bundle(b);
  j["notation"] = bracket_notation(b);
  return j;
}

namespace {

std::string family_notation(const FamilyDescriptor& f) {
  const Surface& s = f.fixed.surface();
  std::string fixed = s.is_plane() ? "O(" + std::to_string(f.fixed[0]) + ")" : "[" + format_divisor(f.fixed) + "]";
  std::string moving;
  if (s.is_plane()) {
    moving = "O(t)";
  } else {
    const bool fixed_t = f.t_max && *f.t_max == f.t_min;
    const std::string sl = format_divisor(f.slope);
    if (fixed_t) moving = format_divisor(f.t_min * f.slope);
    else moving = sl == "-K" ? "-tK" : "t(" + sl + ")";
    switch (f.choice) {
      case CurveChoice::None:
        if (!f.offset.is_zero()) moving += "+" + format_divisor(f.offset);
        break;
      case CurveChoice::MinusOne:
      case CurveChoice::Zero: moving += "+C"; break;
      case CurveChoice::DisjointMinusOne: moving += "+C+C'"; break;
    }
    moving = "[" + moving + "]";
  }
  std::string out = fixed + "⊕" + moving;
  if (!f.t_max) out += ", t>=" + std::to_string(f.t_min);
  else if (*f.t_max != f.t_min) out += ", " + std::to_string(f.t_min) + "<=t<=" + std::to_string(*f.t_max);
  if (f.choice != CurveChoice::None) out += ", " + describe(f.choice);
  return out;
}

std::string notation(const ClassificationEntry& e) {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BundleDescriptor>) return bracket_notation(b);
        else if constexpr (std::is_same_v<T, FamilyDescriptor>) return family_notation(b);
        else return "open: c1=" + format_divisor(b.c1) + ", c2=" + std::to_string(b.c2);
      },
      e.bundle);
}

const char* choice_name(CurveChoice c) {
  switch (c) {
    case CurveChoice::None: return "none";
    case CurveChoice::MinusOne: return "minus-one";
    case CurveChoice::Zero: return "zero";
    case CurveChoice::DisjointMinusOne: return "disjoint-minus-one-pair";
  }
  return "";
}

}  // namespace

std::string render_bundle(const ClassificationEntry& e) {
  if (const auto* b = std::get_if<BundleDescriptor>(&e.bundle)) return format_bundle(*b);
  if (const auto* f = std::get_if<FamilyDescriptor>(&e.bundle)) return format_bundle(f->at(f->t_min));
  return "open";
}

Json to_json(const ClassificationEntry& e) {
  Json j;
  j["surface"] = e.surface.selector();
  j["case_label"] = e.case_label;
  j["theorem_label"] = e.theorem_label;
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BundleDescriptor>) {
          j["bundle"] = to_json(b);
        } else if constexpr (std::is_same_v<T, FamilyDescriptor>) {
          Json f;
          f["shape"] = "family";
          f["fixed"] = to_json(b.fixed);
          f["slope"] = to_json(b.slope);
          f["offset"] = to_json(b.offset);
          f["t_min"] = b.t_min;
          if (b.t_max) f["t_max"] = *b.t_max;
          f["choice"] = choice_name(b.choice);
          f["choice_count"] = b.choice_count;
          f["text"] = render_bundle(e);
          f["notation"] = family_notation(b);
          j["bundle"] = f;
        } else {
          Json o;
          o["shape"] = "open";
          o["c1"] = to_json(b.c1);
          o["c2"] = b.c2;
          o["note"] = b.note;
          o["text"] = "open";
          o["notation"] = notation(e);
          j["bundle"] = o;
        }
      },
      e.bundle);
  j["c1"] = to_json(e.chern.c1);
  j["c2"] = e.chern.c2;
  j["c1_sq"] = e.chern.c1_sq;
  j["delta"] = e.chern.delta;
  j["existence"] = to_string(e.existence.kind);
  if (!e.existence.citation.empty()) j["citation"] = e.existence.citation;
  if (e.stability) j["stability"] = to_string(*e.stability);
  return j;
}

Json to_json(const CurveClass& c) {
  Json j;
  j["class"] = to_json(c.cls);
  j["text"] = format_divisor_plain(c.cls);
  j["type"] = to_string(c.type);
  j["signature"] = c.signature;
  j["anticanonical_degree"] = -intersect(canonical_class(c.cls.surface()), c.cls);
  j["self_intersection"] = self_intersection(c.cls);
  return j;
}

namespace {

Json candidate_json(const Candidate& c) {
  Json j;
  j["text"] = describe(c);
  j["c1"] = to_json(c.chern.c1);
  j["c2"] = c.chern.c2;
  j["c1_sq"] = c.chern.c1_sq;
  j["delta"] = c.chern.delta;
  j["exact"] = c.exact;
  j["bundle"] = c.bundle ? to_json(*c.bundle) : Json(nullptr);
  return j;
}

}  // namespace

Json to_json(const CrossCheckReport& r) {
  Json j;
  j["corollary"] = r.corollary_id;
  j["scope"] = r.scope();
  j["bounds"] = Json{{"coeff_cap", r.bounds.coeff_cap}, {"degz_cap", r.bounds.degz_cap}};
  j["target"] = Json{{"kind", to_string(r.target.kind)}, {"value", r.target.value}};
  j["candidate_count"] = r.candidate_count;
  Json agreed = Json::array();
  for (const auto& e : r.agreed) agreed.push_back(e.case_label);
  j["agreed"] = agreed;
  Json conly = Json::array();
  for (const auto& e : r.classifier_only) conly.push_back(to_json(e));
  j["classifier_only"] = conly;
  Json oonly = Json::array();
  for (const auto& o : r.oracle_only) {
    Json x = candidate_json(o.candidate);
    x["reason"] = o.reason.empty() ? Json(nullptr) : Json(o.reason);
    oonly.push_back(x);
  }
  j["oracle_only"] = oonly;
  j["unexplained"] = r.unexplained();
  j["success"] = r.success();
  return j;
}

// ---- tables -----------------------------------------------------------------

namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out) const {
    std::vector<std::size_t> w(header.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], display_width(r[i]));
    };
    widen(header);
    for (const auto& r : rows) widen(r);
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        s += r[i];
        if (i + 1 < r.size()) s += std::string(w[i] - display_width(r[i]) + 2, ' ');
      }
      out << s << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

void print_entries(const std::vector<ClassificationEntry>& v, std::ostream& out) {
  Table t{{"case", "theorem", "surface", "bundle", "notation", "c1", "c2", "c1^2", "delta", "existence", "stability"},
          {}};
  for (const auto& e : v)
    t.rows.push_back({e.case_label, e.theorem_label, e.surface.selector(), render_bundle(e), notation(e),
                      format_divisor(e.chern.c1), std::to_string(e.chern.c2), std::to_string(e.chern.c1_sq),
                      std::to_string(e.chern.delta), to_string(e.existence.kind),
                      e.stability ? to_string(*e.stability) : "-"});
  t.print(out);
}

enum class Format { Json, Table };

struct Options {
  std::string format;
  std::string surface;
  std::string type = "minus-one";
  std::string bundle;
  std::string corollary;
  std::optional<Int> max_c2, max_c1sq, max_delta, max_c1, max_c2_minus_c1;
  Int cap = SearchBounds{}.coeff_cap;
  Int degz_cap = SearchBounds{}.degz_cap;
};

Format resolve_format(const std::string& flag) {
  std::string f = flag;
  if (f.empty()) {
    const char* env = std::getenv("CHERN_LATTICE_FORMAT");
    f = env && *env ? env : "table";
  }
  if (f == "json") return Format::Json;
  if (f == "table") return Format::Table;
  throw InvalidInput("format must be json or table, got '" + f + "'");
}

Surface need_surface(const Options& o, const std::string& verb) {
  if (o.surface.empty()) throw InvalidInput(verb + " needs --surface (hirzebruch:<e>, dp:<d> or p2)");
  return Surface::parse(o.surface);
}

void emit_json(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

int cmd_surfaces(const Options& o, std::ostream& out) {
  struct Row {
    std::string selector, rank, k2, basis, classified;
  };
  std::vector<Row> rows{{"hirzebruch:<e>", "2", "8", "H, F (H^2 = -e, H.F = 1)",
                         "max_c2 <= e+6; max_c1sq <= 16 (e=0) or 8e+12; max_delta <= 16"}};
  for (Int d = 1; d <= 7; ++d) {
    Surface s = Surface::del_pezzo(d);
    std::string basis;
    for (const auto& b : s.basis_names()) basis += (basis.empty() ? "" : ", ") + b;
    rows.push_back({s.selector(), std::to_string(s.rank()), std::to_string(d), basis,
                    "max_c2 <= " + std::to_string(d + 2) + "; max_delta <= 6"});
  }
  rows.push_back({"p2", "1", "9", "H (H^2 = 1)", "max_c1 <= 3; max_c2 <= 6; max_c2_minus_c1 <= 2; max_delta <= 24"});
  if (resolve_format(o.format) == Format::Json) {
    Json a = Json::array();
    for (const auto& r : rows)
      a.push_back(Json{{"selector", r.selector}, {"rank", std::stoi(r.rank)}, {"K_sq", std::stoi(r.k2)},
                       {"basis", r.basis}, {"classified", r.classified}});
    emit_json(a, out);
  } else {
    Table t{{"surface", "rank", "K^2", "basis", "classified range"}, {}};
    for (const auto& r : rows) t.rows.push_back({r.selector, r.rank, r.k2, r.basis, r.classified});
    t.print(out);
  }
  return Ok;
}

int cmd_curves(const Options& o, std::ostream& out) {
  Surface s = need_surface(o, "curves");
  if (!s.is_del_pezzo()) throw InvalidInput("curves are enumerated on dp:1..dp:7 only, got " + s.selector());
  std::vector<CurveClass> v;
  if (o.type == "minus-one") v = enumerate_minus_one_curves(s.parameter());
  else if (o.type == "zero") v = enumerate_zero_curves(s.parameter());
  else throw InvalidInput("--type must be minus-one or zero, got '" + o.type + "'");
  if (resolve_format(o.format) == Format::Json) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(to_json(c));
    emit_json(a, out);
  } else {
    Table t{{"class", "signature", "-K.C", "C^2"}, {}};
    for (const auto& c : v)
      t.rows.push_back({format_divisor_plain(c.cls), c.signature,
                        std::to_string(-intersect(canonical_class(s), c.cls)),
                        std::to_string(self_intersection(c.cls))});
    t.print(out);
  }
  return Ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
  std::vector<std::pair<Constraint::Kind, std::optional<Int>>> given{
      {Constraint::Kind::MaxC2, o.max_c2},
      {Constraint::Kind::MaxC1Sq, o.max_c1sq},
      {Constraint::Kind::MaxDelta, o.max_delta},
      {Constraint::Kind::MaxC1, o.max_c1},
      {Constraint::Kind::MaxC2MinusC1, o.max_c2_minus_c1}};
  std::vector<Constraint> cs;
  for (const auto& [k, v] : given)
    if (v) cs.push_back({k, *v});
  std::vector<ClassificationEntry> v;
  if (!o.corollary.empty()) {
    if (!cs.empty() || !o.surface.empty())
      throw InvalidInput("--corollary takes no --surface or constraint flags");
    v = corollary(o.corollary);
  } else {
    Surface s = need_surface(o, "classify");
    if (cs.size() != 1)
      throw InvalidInput("classify needs exactly one of --max-c2, --max-c1sq, --max-delta, --max-c1, "
                         "--max-c2-minus-c1 (or --corollary)");
    v = classify(s, cs.front());
  }
  if (resolve_format(o.format) == Format::Json) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(to_json(e));
    emit_json(a, out);
  } else {
    print_entries(v, out);
  }
  return Ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  Surface s = need_surface(o, "check");
  if (o.bundle.empty()) throw InvalidInput("check needs --bundle");
  const BundleDescriptor b = canonical(parse_bundle(o.bundle, s));
  const ChernData c = chern(b);
  const AmpleReport r = numeric_ample_necessary(b);
  std::optional<BogomolovPair> pair;
  if (bogomolov_unstable(c)) pair = find_bogomolov_pair(s, c, SearchBounds{o.cap, std::max(o.degz_cap, c.c2)});
  std::string stab;
  if (s.is_plane())
    if (auto x = p2_stability(b)) stab = to_string(*x);

  if (resolve_format(o.format) == Format::Json) {
    Json j;
    j["surface"] = s.selector();
    j["bundle"] = to_json(b);
    j["c1"] = to_json(c.c1);
    j["c2"] = c.c2;
    j["c1_sq"] = c.c1_sq;
    j["delta"] = c.delta;
    j["chi"] = rank2_chi(c);
    j["checks"] = Json{{"curve_degree", r.curve_degree},
                       {"summands_ample", r.summands_ample ? Json(*r.summands_ample) : Json(nullptr)},
                       {"kleiman", r.kleiman},
                       {"ballico", r.ballico}};
    j["passes"] = r.passes();
    j["exact"] = r.exact;
    j["bogomolov_unstable"] = bogomolov_unstable(c);
    if (pair) j["destabilizing"] = Json{{"L", to_json(pair->L)}, {"M", to_json(pair->M)}, {"degZ", pair->degZ}};
    if (!stab.empty()) j["stability"] = stab;
    emit_json(j, out);
    return Ok;
  }
  auto yn = [](bool x) { return std::string(x ? "pass" : "FAIL"); };
  Table t{{"field", "value"}, {}};
  t.rows.push_back({"surface", s.selector()});
  t.rows.push_back({"bundle", format_bundle(b)});
  t.rows.push_back({"notation", bracket_notation(b)});
  t.rows.push_back({"c1", format_divisor(c.c1)});
  t.rows.push_back({"c2", std::to_string(c.c2)});
  t.rows.push_back({"c1^2", std::to_string(c.c1_sq)});
  t.rows.push_back({"delta", std::to_string(c.delta)});
  t.rows.push_back({"chi", std::to_string(rank2_chi(c))});
  t.rows.push_back({"c1.C >= 2 on cone generators", yn(r.curve_degree)});
  if (r.summands_ample) t.rows.push_back({"summands ample", yn(*r.summands_ample)});
  t.rows.push_back({"0 < c2 < c1^2", yn(r.kleiman)});
  t.rows.push_back({"c1^2 <= (c2+1)^2", yn(r.ballico)});
  t.rows.push_back({"verdict", r.passes() ? (r.exact ? "ample" : "passes necessary conditions") : "not ample"});
  t.rows.push_back({"c1^2 > 4c2", bogomolov_unstable(c) ? "yes" : "no"});
  if (pair)
    t.rows.push_back({"destabilizing", "L=" + format_divisor(pair->L) + ", M=" + format_divisor(pair->M) +
                                           ", degZ=" + std::to_string(pair->degZ)});
  if (!stab.empty()) t.rows.push_back({"stability", stab});
  t.print(out);
  return Ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.corollary.empty()) throw InvalidInput("verify needs --corollary");
  const CrossCheckReport r = cross_check(o.corollary, SearchBounds{o.cap, o.degz_cap});
  if (resolve_format(o.format) == Format::Json) {
    emit_json(to_json(r), out);
  } else {
    out << r.scope() << '\n';
    out << "candidates " << r.candidate_count << ", agreed " << r.agreed.size() << ", classifier-only "
        << r.classifier_only.size() << ", oracle-only " << r.oracle_only.size() << " (unexplained "
        << r.unexplained() << ")\n";
    if (!r.classifier_only.empty()) {
      out << "\nclassifier-only:\n";
      print_entries(r.classifier_only, out);
    }
    std::map<std::string, std::size_t> reasons;
    for (const auto& x : r.oracle_only)
      if (!x.reason.empty()) ++reasons[x.reason];
    if (!reasons.empty()) {
      out << "\noracle-only, by exclusion reason:\n";
      Table t{{"count", "reason"}, {}};
      for (const auto& [why, n] : reasons) t.rows.push_back({std::to_string(n), why});
      t.print(out);
    }
    if (r.unexplained() > 0) {
      out << "\nunexplained oracle-only candidates:\n";
      Table t{{"surface", "candidate", "c2", "c1^2", "delta"}, {}};
      for (const auto& x : r.oracle_only)
        if (x.reason.empty())
          t.rows.push_back({x.candidate.chern.c1.surface().selector(), describe(x.candidate),
                            std::to_string(x.candidate.chern.c2), std::to_string(x.candidate.chern.c1_sq),
                            std::to_string(x.candidate.chern.delta)});
      t.print(out);
    }
    out << "\nresult: " << (r.success() ? "agreement" : "DISCREPANCY") << '\n';
  }
  return r.success() ? Ok : Mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-2 ample vector bundles on rational surfaces: lattice tools and classification lists",
               "chernlat"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "json or table (default: $CHERN_LATTICE_FORMAT, else table)");
  app.fallthrough();

  auto* surfaces = app.add_subcommand("surfaces", "list supported surfaces and their classified ranges");
  auto* curves = app.add_subcommand("curves", "enumerate (-1)- or 0-curves on a Del Pezzo surface");
  curves->add_option("--surface", o.surface, "dp:<d>")->required();
  curves->add_option("--type", o.type, "minus-one or zero");
  auto* classify_cmd = app.add_subcommand("classify", "list the ample bundles in a classified range");
  classify_cmd->add_option("--surface", o.surface, "hirzebruch:<e>, dp:<d> or p2");
  classify_cmd->add_option("--max-c2", o.max_c2);
  classify_cmd->add_option("--max-c1sq", o.max_c1sq);
  classify_cmd->add_option("--max-delta", o.max_delta);
  classify_cmd->add_option("--max-c1", o.max_c1);
  classify_cmd->add_option("--max-c2-minus-c1", o.max_c2_minus_c1);
  classify_cmd->add_option("--corollary", o.corollary, "one of 2.6, 2.11, 2.12, 3.14, 3.15, 4.7, 4.8");
  auto* check = app.add_subcommand("check", "Chern data and numeric ampleness tests for one bundle");
  check->add_option("--surface", o.surface)->required();
  check->add_option("--bundle", o.bundle, "sum(D, D) | ext(D, D; degZ=n; split|nonsplit|unknown) | tangent | "
                                          "tangent(k)")
      ->required();
  check->add_option("--cap", o.cap, "coefficient cap for the destabilizing-pair search");
  auto* verify = app.add_subcommand("verify", "cross-check a corollary's list against brute-force search");
  verify->add_option("--corollary", o.corollary)->required();
  verify->add_option("--cap", o.cap, "coefficient cap per basis element");
  verify->add_option("--degz-cap", o.degz_cap, "largest degZ tried for extensions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Ok;
    }
    err << "chernlat: " << e.what() << '\n';
    return InputError;
  }
  try {
    if (surfaces->parsed()) return cmd_surfaces(o, out);
    if (curves->parsed()) return cmd_curves(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (check->parsed()) return cmd_check(o, out);
    return cmd_verify(o, out);
  } catch (const UnsupportedRange& e) {
    err << "chernlat: unsupported range: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "chernlat: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "chernlat: integer overflow: " << e.what() << '\n';
  }
  return InputError;
}

}  // namespace chernlat::cli
