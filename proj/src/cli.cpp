#include "krtorus/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <regex>
#include <sstream>

#include "krtorus/c2cohomology.hpp"
#include "krtorus/dirac_index.hpp"
#include "krtorus/errors.hpp"
#include "krtorus/gerbe_class.hpp"
#include "krtorus/kr_engine.hpp"
#include "krtorus/tduality.hpp"
#include "krtorus/torus_class.hpp"

namespace krtorus::cli {

namespace {

// ---------------------------------------------------------------- parsing

std::string join(const std::string& ptr, std::string_view key) {
  std::string k(key);
  std::string escaped;
  for (char c : k) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return ptr + "/" + escaped;
}

std::string join(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const Json& require_object(const Json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  return j;
}

const Json* optional_field(const Json& obj, const std::string& ptr, const char* key) {
  require_object(obj, ptr);
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& required_field(const Json& obj, const std::string& ptr, const char* key) {
  const Json* f = optional_field(obj, ptr, key);
  if (!f) throw SchemaError(join(ptr, key), std::string("missing required field '") + key + "'");
  return *f;
}

void reject_unknown(const Json& obj, const std::string& ptr,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw SchemaError(join(ptr, it.key()), "unknown field '" + it.key() + "'");
  }
}

BigInt parse_int(const Json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    static const std::regex re("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, re)) throw SchemaError(ptr, "expected an integer string");
    return BigInt(s);
  }
  throw SchemaError(ptr, "expected an integer or integer string");
}

long parse_long(const Json& j, const std::string& ptr) {
  const BigInt v = parse_int(j, ptr);
  if (!v.fits_slong_p()) throw SchemaError(ptr, "integer out of range");
  return v.get_si();
}

long parse_nonnegative(const Json& j, const std::string& ptr) {
  const long v = parse_long(j, ptr);
  if (v < 0) throw SchemaError(ptr, "expected a nonnegative integer");
  return v;
}

int parse_bit(const Json& j, const std::string& ptr) {
  const long v = parse_long(j, ptr);
  if (v != 0 && v != 1) throw SchemaError(ptr, "expected 0 or 1");
  return static_cast<int>(v);
}

bool parse_bool(const Json& j, const std::string& ptr) {
  if (!j.is_boolean()) throw SchemaError(ptr, "expected a boolean");
  return j.get<bool>();
}

Rational parse_rational(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(parse_int(j, ptr));
  if (!j.is_string()) throw SchemaError(ptr, "expected a rational string such as \"1/2\"");
  static const std::regex re("(-?[0-9]+)(/([0-9]+))?");
  std::smatch m;
  const auto& s = j.get_ref<const std::string&>();
  if (!std::regex_match(s, m, re)) throw SchemaError(ptr, "expected \"p\" or \"p/q\"");
  const BigInt num(m[1].str());
  const BigInt den(m[3].matched ? m[3].str() : std::string("1"));
  if (den == 0) throw SchemaError(ptr, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntMatrix parse_matrix(const Json& j, const std::string& ptr, bool allow_empty_rows = false) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array of rows");
  const std::size_t rows = j.size();
  if (rows == 0) return IntMatrix(0, 0);
  if (!j[0].is_array()) throw SchemaError(join(ptr, std::size_t{0}), "expected a row array");
  const std::size_t cols = j[0].size();
  if (cols == 0 && !allow_empty_rows) throw SchemaError(join(ptr, std::size_t{0}), "empty row");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = join(ptr, i);
    if (!j[i].is_array()) throw SchemaError(rp, "expected a row array");
    if (j[i].size() != cols) throw SchemaError(rp, "rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_int(j[i][c], join(rp, c));
  }
  return m;
}

IntVector parse_int_vector(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_int(j[i], join(ptr, i)));
  return v;
}

RationalVector parse_rational_vector(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rational(j[i], join(ptr, i)));
  return v;
}

std::vector<FactorType> parse_factors(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array of factor types");
  std::vector<FactorType> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(join(ptr, i), "expected \"T1\"..\"T5\"");
    try {
      out.push_back(parse_factor_type(j[i].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(join(ptr, i), e.what());
    }
  }
  return out;
}

PointGerbeClass parse_point_gerbe(const Json& j, const std::string& ptr) {
  require_object(j, ptr);
  reject_unknown(j, ptr, {"e", "mu"});
  PointGerbeClass g;
  if (const Json* e = optional_field(j, ptr, "e")) g.e = parse_bit(*e, join(ptr, "e"));
  if (const Json* mu = optional_field(j, ptr, "mu")) g.mu = parse_bit(*mu, join(ptr, "mu"));
  return g;
}

RealTorus parse_torus(const Json& payload, const std::string& ptr) {
  RealTorus x;
  x.sigma = parse_matrix(required_field(payload, ptr, "sigma"), join(ptr, "sigma"));
  if (x.sigma.rows() == 0) throw SchemaError(join(ptr, "sigma"), "sigma must be nonempty");
  if (x.sigma.rows() != x.sigma.cols())
    throw SchemaError(join(ptr, "sigma"), "sigma must be square");
  if (const Json* t = optional_field(payload, ptr, "t")) {
    x.translation_lift = parse_rational_vector(*t, join(ptr, "t"));
    if (x.translation_lift.size() != x.sigma.rows())
      throw SchemaError(join(ptr, "t"), "t must have one entry per row of sigma");
  } else {
    x.translation_lift.assign(x.sigma.rows(), Rational(0));
  }
  return x;
}

AffineGerbeClass parse_gerbe(const Json* j, const std::string& ptr, const RealTorus& x) {
  if (!j || (j->is_string() && j->get<std::string>() == "trivial")) return trivial_gerbe(x);
  if (j->is_string()) throw SchemaError(ptr, "expected \"trivial\" or a gerbe object");
  require_object(*j, ptr);
  reject_unknown(*j, ptr, {"lambda", "point_twist", "signatures"});
  AffineGerbeClass g;
  if (const Json* l = optional_field(*j, ptr, "lambda")) {
    g.lambda_part = parse_int_vector(*l, join(ptr, "lambda"));
    if (g.lambda_part.size() != x.rank())
      throw SchemaError(join(ptr, "lambda"), "lambda must have one entry per row of sigma");
  } else {
    g.lambda_part.assign(x.rank(), BigInt(0));
  }
  if (const Json* p = optional_field(*j, ptr, "point_twist"))
    g.point_twist = parse_point_gerbe(*p, join(ptr, "point_twist"));
  if (const Json* s = optional_field(*j, ptr, "signatures")) {
    const std::string sp = join(ptr, "signatures");
    if (!s->is_array()) throw SchemaError(sp, "expected an array of pairs");
    for (std::size_t i = 0; i < s->size(); ++i) {
      const Json& pair = (*s)[i];
      const std::string pp = join(sp, i);
      if (!pair.is_array() || pair.size() != 2) throw SchemaError(pp, "expected a pair [s0, s1]");
      g.signatures.push_back({parse_bit(pair[0], join(pp, std::size_t{0})),
                              parse_bit(pair[1], join(pp, std::size_t{1}))});
    }
  }
  return g;
}

// ---------------------------------------------------------------- output

std::string str(const BigInt& v) { return v.get_str(); }

std::string str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
}

Json to_json(const FGAbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(str(t));
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

Json to_json(PointGerbeClass g) { return {{"e", g.e}, {"mu", g.mu}}; }

Json to_json(const std::vector<FactorType>& f) {
  Json out = Json::array();
  for (FactorType t : f) out.push_back(std::string(to_string(t)));
  return out;
}

Json to_json(const RealTorus& x) {
  return {{"sigma", to_json(x.sigma)}, {"t", to_json(x.translation_lift)}};
}

Json to_json(const AffineGerbeClass& g) {
  Json sig = Json::array();
  for (const auto& [s0, s1] : g.signatures) sig.push_back({s0, s1});
  return {{"lambda", to_json(g.lambda_part)},
          {"point_twist", to_json(g.point_twist)},
          {"signatures", sig}};
}

Json to_json(const ReducedGerbe& r) {
  return {{"factors", to_json(r.factors)}, {"residual_twist", to_json(r.residual_twist)}};
}

Json to_json(const GradedGroupZ8& g) {
  Json out = Json::array();
  for (int j = 0; j < 8; ++j) out.push_back(to_json(g[j]));
  return out;
}

Json to_json(const KRTable& t) {
  Json gens = Json::array();
  for (const auto& g : t.generators)
    gens.push_back({{"name", g.name}, {"degree", g.degree}, {"order", g.order}});
  return {{"type", t.type_tag},
          {"groups", to_json(t.graded)},
          {"generators", gens},
          {"free_over_R", t.free_over_R}};
}

Json to_json(const FMReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json rows = Json::array();
    for (const auto& row : c.rows)
      rows.push_back({{"j", row.source_degree},
                      {"j_target", row.target_degree},
                      {"source", to_json(row.source)},
                      {"target", to_json(row.target)},
                      {"equal", row.equal}});
    cands.push_back({{"source_factors", to_json(c.source_factors)},
                     {"target_factors", to_json(c.target_factors)},
                     {"source_twist", to_json(c.source_twist)},
                     {"target_twist", to_json(c.target_twist)},
                     {"degrees", rows},
                     {"pass", c.pass}});
  }
  return {{"pass", r.pass},
          {"candidates", cands},
          {"source_free_rank", r.source_free_rank},
          {"target_free_rank", r.target_free_rank}};
}

Json to_json(const DualityDatum& d) {
  Json cands = Json::array();
  for (std::size_t i = 0; i < d.target_candidates.size(); ++i)
    cands.push_back({{"gerbe", to_json(d.target_candidates[i])},
                     {"reduced", to_json(d.target_reduced[i])}});
  Json shifts = Json::array();
  for (int s : d.shift_ledger.target_twist_shifts) shifts.push_back(s);
  return {{"source", {{"torus", to_json(d.source)},
                      {"gerbe", to_json(d.source_gerbe)},
                      {"reduced", to_json(d.source_reduced)},
                      {"chern_nonzero", d.source_chern_nonzero}}},
          {"target", {{"torus", to_json(d.target)},
                      {"chern_nonzero", d.target_chern_nonzero},
                      {"candidates", cands}}},
          {"delta", to_json(d.delta)},
          {"shift_ledger",
           {{"fiber_dimension", *d.shift_ledger.fiber_dimension},
            {"minus_rank", *d.shift_ledger.minus_rank},
            {"source_twist_shift", d.shift_ledger.source_twist_shift},
            {"target_twist_shifts", shifts}}},
          {"candidate_count", d.target_candidates.size()}};
}

// ---------------------------------------------------------------- commands

struct Outcome {
  Json input;
  Json result;
};

Outcome cmd_classify(const Json& p, const std::string& ptr) {
  reject_unknown(p, ptr, {"sigma", "t"});
  const RealTorus x = parse_torus(p, ptr);
  const DecompositionInvariants inv = decompose(x);
  Json factors = Json::array();
  Json pending = Json::array();
  for (const FactorSlot& s : canonical_factors(inv)) {
    factors.push_back(std::string(to_string(s.type)));
    pending.push_back(s.gerbe_pending);
  }
  Json result = {{"invariants",
                  {{"a", inv.trivial}, {"b", inv.cyclotomic}, {"r", inv.regular},
                   {"chern", inv.chern_nonzero}}},
                 {"factors", factors},
                 {"gerbe_pending", pending},
                 {"chern_vector", to_json(x.chern_vector())},
                 {"dual_sigma", to_json(dual_torus(x).sigma)}};
  return {to_json(x), result};
}

Outcome cmd_dualize(const Json& p, const std::string& ptr) {
  if (optional_field(p, ptr, "factors")) {
    reject_unknown(p, ptr, {"factors"});
    const auto f = parse_factors(p["factors"], join(ptr, "factors"));
    return {{{"factors", to_json(f)}}, {{"factors", to_json(dualize_classified(f))}}};
  }
  reject_unknown(p, ptr, {"sigma", "t", "gerbe"});
  const RealTorus x = parse_torus(p, ptr);
  const AffineGerbeClass g = parse_gerbe(optional_field(p, ptr, "gerbe"), join(ptr, "gerbe"), x);
  const DualityDatum d = tdualize(x, g);
  Json input = to_json(x);
  input["gerbe"] = to_json(g);
  return {input, to_json(d)};
}

Outcome cmd_kr_groups(const Json& p, const std::string& ptr) {
  reject_unknown(p, ptr, {"factors", "twist"});
  const auto f = parse_factors(required_field(p, ptr, "factors"), join(ptr, "factors"));
  PointGerbeClass twist;
  if (const Json* t = optional_field(p, ptr, "twist")) twist = parse_point_gerbe(*t, join(ptr, "twist"));
  const KRTorusResult r = kr_torus(f, twist);
  Json result = {{"complete", r.complete}, {"twist_shift", degree_shift_of_twist(twist)}};
  if (r.complete) {
    result["groups"] = to_json(r.groups);
  } else {
    Json tables = Json::array();
    for (const auto& t : r.factor_tables) tables.push_back(to_json(t));
    result["factor_tables"] = tables;
    result["reason"] = r.reason;
  }
  if (f.size() <= 1) result["table"] = to_json(f.empty() ? kr_point_table() : kr_table(f[0]));
  return {{{"factors", to_json(f)}, {"twist", to_json(twist)}}, result};
}

Outcome cmd_fm_verify(const Json& p, const std::string& ptr) {
  TorusWithGerbe pair;
  Json input;
  if (const Json* f = optional_field(p, ptr, "factors")) {
    reject_unknown(p, ptr, {"factors", "gerbe"});
    const auto factors = parse_factors(*f, join(ptr, "factors"));
    PointGerbeClass twist;
    if (const Json* g = optional_field(p, ptr, "gerbe")) {
      const std::string gp = join(ptr, "gerbe");
      if (g->is_string()) {
        if (g->get<std::string>() != "trivial")
          throw SchemaError(gp, "expected \"trivial\" or {\"point_twist\": ...}");
      } else {
        require_object(*g, gp);
        reject_unknown(*g, gp, {"point_twist"});
        if (const Json* t = optional_field(*g, gp, "point_twist"))
          twist = parse_point_gerbe(*t, join(gp, "point_twist"));
      }
    }
    pair = realize(factors, twist);
    input = {{"factors", to_json(factors)}, {"point_twist", to_json(twist)}};
  } else {
    reject_unknown(p, ptr, {"sigma", "t", "gerbe"});
    pair.torus = parse_torus(p, ptr);
    pair.gerbe = parse_gerbe(optional_field(p, ptr, "gerbe"), join(ptr, "gerbe"), pair.torus);
    input = to_json(pair.torus);
    input["gerbe"] = to_json(pair.gerbe);
  }
  const DualityDatum d = tdualize(pair.torus, pair.gerbe);
  Json result;
  result["candidate_count"] = d.target_candidates.size();
  result["source_factors"] = to_json(d.source_reduced.factors);
  if (kr_supported(d.source_reduced.factors)) {
    const FMReport r = fm_verify(d);
    result["mode"] = "product";
    result.update(to_json(r));
    result["degrees"] = result["candidates"][0]["degrees"];
  } else {
    const FactorwiseReport r = fm_verify_factorwise(d);
    result["mode"] = "factorwise";
    result["pass"] = r.pass;
    Json pairs = Json::array();
    for (const auto& fp : r.pairs)
      pairs.push_back({{"source", std::string(to_string(fp.source))},
                       {"target", std::string(to_string(fp.target))},
                       {"report", to_json(fp.report)}});
    result["factor_pairs"] = pairs;
  }
  return {input, result};
}

Outcome cmd_cohomology(const Json& p, const std::string& ptr) {
  reject_unknown(p, ptr, {"sigma", "relations", "sign_twist", "k", "coefficients"});
  const IntMatrix sigma = parse_matrix(required_field(p, ptr, "sigma"), join(ptr, "sigma"));
  if (sigma.rows() == 0 || sigma.rows() != sigma.cols())
    throw SchemaError(join(ptr, "sigma"), "sigma must be a nonempty square matrix");
  C2Module m = C2Module::lattice(sigma);
  if (const Json* r = optional_field(p, ptr, "relations")) {
    const IntMatrix rel = parse_matrix(*r, join(ptr, "relations"), true);
    if (rel.rows() != 0 && rel.rows() != sigma.rows())
      throw SchemaError(join(ptr, "relations"), "relations need one row per generator");
    if (rel.rows() != 0) m.relations = rel;
  }
  if (const Json* s = optional_field(p, ptr, "sign_twist"))
    m.sign_twist = parse_bool(*s, join(ptr, "sign_twist"));
  const long k = parse_nonnegative(required_field(p, ptr, "k"), join(ptr, "k"));
  if (k > std::numeric_limits<int>::max()) throw SchemaError(join(ptr, "k"), "degree too large");
  std::string coeff = "module";
  if (const Json* c = optional_field(p, ptr, "coefficients")) {
    if (!c->is_string() || (c->get<std::string>() != "module" && c->get<std::string>() != "torus"))
      throw SchemaError(join(ptr, "coefficients"), "expected \"module\" or \"torus\"");
    coeff = c->get<std::string>();
  }
  const FGAbelianGroup g = coeff == "torus"
                               ? cohomology_torus_coeff({m}, static_cast<int>(k))
                               : cohomology(m, static_cast<int>(k));
  Json input = {{"sigma", to_json(m.sigma)},
                {"relations", to_json(m.relation_lattice())},
                {"sign_twist", m.sign_twist},
                {"k", k},
                {"coefficients", coeff}};
  return {input, {{"group", to_json(g)}}};
}

Outcome cmd_affine_gerbes(const Json& p, const std::string& ptr) {
  reject_unknown(p, ptr, {"sigma", "t"});
  const RealTorus x = parse_torus(p, ptr);
  const AffineGerbeGroup g = classify_affine_gerbes(x);
  const AffineH2 whole = affine_h2(x.affine_coefficient());
  Json tags = Json::array();
  Json groups = Json::array();
  for (std::size_t i = 0; i < g.case_tags.size(); ++i) {
    tags.push_back(g.case_tags[i]);
    groups.push_back(to_json(g.factor_groups[i]));
  }
  Json reps = Json::array();
  for (const auto& r : whole.representatives)
    reps.push_back({{"lambda", to_json(r.lambda)}, {"u", str(r.u)}});
  Json result = {{"group", to_json(g.group)},
                 {"case_tags", tags},
                 {"factor_groups", groups},
                 {"whole_torus", {{"group", to_json(whole.group)}, {"representatives", reps}}}};
  return {to_json(x), result};
}

RealSpinContext parse_context(const Json& p, const std::string& ptr, bool need_betti) {
  reject_unknown(p, ptr, {"n", "k", "b_plus", "b_minus", "has_fixed_point"});
  RealSpinContext c;
  c.n = parse_nonnegative(required_field(p, ptr, "n"), join(ptr, "n"));
  c.k = parse_long(required_field(p, ptr, "k"), join(ptr, "k"));
  const auto betti = [&](const char* key, long& out) {
    const Json* f = need_betti ? &required_field(p, ptr, key) : optional_field(p, ptr, key);
    if (f) out = parse_nonnegative(*f, join(ptr, key));
  };
  betti("b_plus", c.b_plus);
  betti("b_minus", c.b_minus);
  if (const Json* f = optional_field(p, ptr, "has_fixed_point"))
    c.has_fixed_point = parse_bool(*f, join(ptr, "has_fixed_point"));
  return c;
}

Json to_json(const RealSpinContext& c) {
  return {{"n", c.n}, {"k", c.k}, {"b_plus", c.b_plus}, {"b_minus", c.b_minus},
          {"has_fixed_point", c.has_fixed_point}};
}

Outcome cmd_index(const Json& p, const std::string& ptr) {
  const RealSpinContext c = parse_context(p, ptr, false);
  const IndexConstraint ic = index_constraint(c);
  return {to_json(c),
          {{"verdict", std::string(to_string(ic.verdict))},
           {"mod2", ic.mod2_index_available},
           {"lift_degree", ic.lift_degree}}};
}

Outcome cmd_jacobian_shift(const Json& p, const std::string& ptr) {
  const RealSpinContext c = parse_context(p, ptr, true);
  const JacobianDegrees d = jacobian_degrees(c);
  return {to_json(c),
          {{"albanese_push", d.albanese_push},
           {"fm_shift", d.fm_shift},
           {"ind_degree", d.ind_degree},
           {"identity_holds", (d.albanese_push + d.fm_shift) % 8 == d.ind_degree}}};
}

using Handler = Outcome (*)(const Json&, const std::string&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"classify", cmd_classify},         {"dualize", cmd_dualize},
      {"kr-groups", cmd_kr_groups},       {"fm-verify", cmd_fm_verify},
      {"cohomology", cmd_cohomology},     {"affine-gerbes", cmd_affine_gerbes},
      {"index", cmd_index},               {"jacobian-shift", cmd_jacobian_shift}};
  return h;
}

// ---------------------------------------------------------------- markdown

void graded_table(std::ostream& os, const Json& groups, const std::string& label) {
  os << "| j | " << label << "^j | j | " << label << "^j |\n|---|---|---|---|\n";
  for (int j = 0; j < 4; ++j)
    os << "| " << j << " | " << groups[j]["text"].get<std::string>() << " | " << j + 4
       << " | " << groups[j + 4]["text"].get<std::string>() << " |\n";
}

void fm_table(std::ostream& os, const Json& degrees) {
  os << "| j | source | j' | target | equal |\n|---|---|---|---|---|\n";
  for (const auto& row : degrees)
    os << "| " << row["j"].get<int>() << " | " << row["source"]["text"].get<std::string>()
       << " | " << row["j_target"].get<int>() << " | "
       << row["target"]["text"].get<std::string>() << " | "
       << (row["equal"].get<bool>() ? "yes" : "no") << " |\n";
}

void fm_report_markdown(std::ostream& os, const Json& report) {
  const auto& cands = report["candidates"];
  for (std::size_t i = 0; i < cands.size(); ++i) {
    os << "\nCandidate " << i << " (target twist e=" << cands[i]["target_twist"]["e"].get<int>()
       << ", mu=" << cands[i]["target_twist"]["mu"].get<int>() << "): "
       << (cands[i]["pass"].get<bool>() ? "pass" : "FAIL") << "\n\n";
    fm_table(os, cands[i]["degrees"]);
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return c;
}

Json run(const Json& request, std::string_view command) {
  require_object(request, "");
  reject_unknown(request, "", {"schema_version", "command", "payload"});
  const Json& version = required_field(request, "", "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
    throw SchemaError("/schema_version", "unsupported schema_version (expected \"1\")");
  std::string name(command);
  if (const Json* c = optional_field(request, "", "command")) {
    if (!c->is_string()) throw SchemaError("/command", "expected a string");
    if (!name.empty() && c->get<std::string>() != name)
      throw SchemaError("/command", "command disagrees with the command line");
    name = c->get<std::string>();
  }
  if (name.empty()) throw SchemaError("/command", "no command given");
  const auto it = handlers().find(name);
  if (it == handlers().end()) throw SchemaError("/command", "unknown command '" + name + "'");
  const Json& payload = required_field(request, "", "payload");
  require_object(payload, "/payload");
  Outcome o = it->second(payload, "/payload");
  return {{"schema_version", kSchemaVersion},
          {"command", name},
          {"input", std::move(o.input)},
          {"result", std::move(o.result)}};
}

Json error_response(std::string_view command, std::string_view kind,
                    std::string_view message, std::string_view pointer) {
  Json err = {{"kind", kind}, {"message", message}};
  if (!pointer.empty() || kind == "SchemaError") err["pointer"] = pointer;
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"error", err}};
}

std::string render_markdown(const Json& response) {
  std::ostringstream os;
  const std::string command = response.value("command", "");
  os << "# krtorus " << command << "\n\n";
  if (response.contains("error")) {
    const Json& e = response["error"];
    os << "**" << e["kind"].get<std::string>() << "**: " << e["message"].get<std::string>();
    if (e.contains("pointer")) os << " (at `" << e["pointer"].get<std::string>() << "`)";
    os << "\n";
    return os.str();
  }
  const Json& r = response["result"];
  if (command == "kr-groups") {
    if (r["complete"].get<bool>()) {
      graded_table(os, r["groups"], "KR");
    } else {
      os << "Not computed: " << r["reason"].get<std::string>() << "\n";
      for (const auto& t : r["factor_tables"]) {
        os << "\n## " << t["type"].get<std::string>() << "\n\n";
        graded_table(os, t["groups"], "KR");
      }
    }
  } else if (command == "fm-verify") {
    os << "Overall: " << (r["pass"].get<bool>() ? "pass" : "FAIL") << " (" << r["mode"].get<std::string>()
       << ")\n";
    if (r["mode"] == "product") {
      fm_report_markdown(os, r);
    } else {
      for (const auto& fp : r["factor_pairs"]) {
        os << "\n## " << fp["source"].get<std::string>() << " -> " << fp["target"].get<std::string>()
           << "\n";
        fm_report_markdown(os, fp["report"]);
      }
    }
  } else {
    os << "```json\n" << r.dump(2) << "\n```\n";
  }
  return os.str();
}

int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real T-duality and KR-theory of Real tori over a point", "krtorus"};
  std::string command;
  std::string input = "-";
  std::string format = "json";
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--input", input, "Request file, or - for standard input");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kSchemaError;
  }

  const auto emit = [&](const Json& doc) {
    if (format == "markdown")
      out << render_markdown(doc);
    else
      out << doc.dump(2) << "\n";
  };

  Json request;
  try {
    if (input == "-") {
      request = Json::parse(in);
    } else {
      std::ifstream f(input);
      if (!f) {
        err << "cannot open " << input << "\n";
        emit(error_response(command, "SchemaError", "cannot open input file", ""));
        return kSchemaError;
      }
      request = Json::parse(f);
    }
  } catch (const Json::parse_error& e) {
    emit(error_response(command, "SchemaError", e.what(), ""));
    return kSchemaError;
  }

  try {
    emit(run(request, command));
    return kOk;
  } catch (const SchemaError& e) {
    emit(error_response(command, "SchemaError", e.what(), e.pointer()));
    return kSchemaError;
  } catch (const MathDomainError& e) {
    emit(error_response(command, e.kind(), e.what()));
    return kMathDomainError;
  }
}

}  // namespace krtorus::cli
