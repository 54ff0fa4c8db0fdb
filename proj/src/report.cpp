// Copyright 2026 The wignerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wignerlab/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "codec.hpp"
#include "wignerlab/errors.hpp"
#include "wignerlab/symmetry.hpp"

namespace wignerlab {

namespace {

using codec::child;
using codec::encode;
using codec::Json;
using codec::Reader;

// Above this many phase points the per-permutation evidence of an
// enumeration (n! claims) is left out of the report.
constexpr std::size_t kMaxExhaustiveEvidence = 6;

std::pair<Observable, Observable> select(const Theory& t, const PairSelection& p) {
  if (t.observables.size() < 2 && (p.a.empty() || p.b.empty()))
    throw PreconditionError("the theory needs two observables");
  const Observable& a = p.a.empty() ? t.observables[0] : t.observable(p.a);
  const Observable& b = p.b.empty() ? t.observables[1] : t.observable(p.b);
  return {a, b};
}

Json names(const Observable& a, const Observable& b) { return Json::array({a.name, b.name}); }

Json claim(const std::string& type) {
  Json c = Json::object();
  c["claim"] = type;
  return c;
}

Json start(const std::string& command, const TheoryDocument& doc) {
  Json r = Json::object();
  r["command"] = command;
  r["theory"] = Json::parse(export_document(doc));
  r["claims"] = Json::array();
  return r;
}

Report finish(Json r, bool positive) {
  r["verdict"] = positive ? "positive" : "negative";
  return {codec::dump(r), positive};
}

std::string kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::wrong_dimension: return "wrong_dimension";
    case Violation::Kind::below_zero: return "below_zero";
    case Violation::Kind::above_one: return "above_one";
    case Violation::Kind::not_normalized: return "not_normalized";
    case Violation::Kind::no_outcomes: return "no_outcomes";
  }
  return "unknown";
}

std::string status_name(CovariantSolution::Status s) {
  switch (s) {
    case CovariantSolution::Status::unique: return "unique";
    case CovariantSolution::Status::none: return "none";
    case CovariantSolution::Status::family: return "family";
    case CovariantSolution::Status::hypothesis_failure: return "hypothesis_failure";
  }
  return "unknown";
}

bool nonnegative_on_vertices(const FunctionalGrid& g, const StateSpace& k) {
  for (const auto& v : k.vertices())
    for (const auto& row : g)
      for (const auto& f : row)
        if (f(v) < 0) return false;
  return true;
}

bool equations_hold(const StateSpace& k, const AffineMap& map,
                    const std::vector<ChannelEquation>& eqs) {
  for (const auto& e : eqs)
    if (!equal_on(k, compose(e.on_target, map), e.on_source)) return false;
  return true;
}

// Convex weights expressing each vertex image in K2; empty when the check is
// analytic (ball target).
Json containment_evidence(const StateSpace& k1, const AffineMap& m, const StateSpace& k2) {
  Json out = Json::array();
  if (!k1.is_polytope() || !k2.is_polytope()) return out;
  for (const auto& v : k1.vertices()) {
    FeasibilityResult r = lp_feasible(hull_membership_program(k2.vertices(), m(v)));
    if (!r.feasible()) throw PreconditionError("map does not send the state space into itself");
    out.push_back(encode(r.witness()));
  }
  return out;
}

bool check_containment(const StateSpace& k1, const AffineMap& m, const StateSpace& k2,
                       const Json& evidence, const Reader& r, const std::string& path) {
  if (k1.is_polytope() && k2.is_polytope()) {
    const auto& vs = k1.vertices();
    r.array(evidence, path);
    if (evidence.size() != vs.size()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Vector w = r.vector(evidence[i], child(path, i), k2.vertices().size());
      if (!satisfies(hull_membership_program(k2.vertices(), m(vs[i])), w)) return false;
    }
    return true;
  }
  if (k1.is_polytope()) {
    for (const auto& v : k1.vertices())
      if (!contains(k2, m(v))) return false;
    return true;
  }
  return map_into(k1, m, k2).contained;
}

std::vector<Vector> vertex_images(const WignerRep& w, const StateSpace& k) {
  std::vector<Vector> out;
  for (const auto& v : k.vertices()) out.push_back(evaluate_flat(w, v));
  return out;
}

// ---------------------------------------------------------------------------
// Claim builders

Json effects_claim(const Theory& t) {
  Json c = claim("effects_valid");
  auto vs = validate(t);
  c["holds"] = vs.empty();
  Json list = Json::array();
  for (const auto& v : vs) {
    Json e = Json::object();
    e["observable"] = v.observable;
    e["outcome"] = v.outcome ? Json(*v.outcome) : Json(nullptr);
    e["kind"] = kind_name(v.kind);
    e["value"] = v.value.to_string();
    if (v.witness) e[v.witness_is_direction ? "direction" : "witness"] = encode(*v.witness);
    e["message"] = v.message;
    list.push_back(std::move(e));
  }
  c["violations"] = std::move(list);
  return c;
}

Json marginals_claim(const WignerRep& w, const StateSpace& k) {
  Json c = claim("marginals");
  c["representation"] = w.name;
  auto v = check_marginals(w, k);
  c["holds"] = !v.has_value();
  if (v) c["message"] = v->message;
  return c;
}

Json compatibility_claim(const Observable& a, const Observable& b, const StateSpace& k) {
  Json c = claim("compatibility");
  c["observables"] = names(a, b);
  try {
    CompatibilityResult r = are_compatible(a, b, k);
    c["holds"] = r.compatible();
    if (r.joint)
      c["joint"] = encode(*r.joint);
    else
      c["certificate"] = encode(*r.certificate);
  } catch (const UnsupportedGeometry& e) {
    c["unsupported"] = e.what();
  }
  return c;
}

Json info_complete_claim(const Observable& a, const Observable& b, const StateSpace& k) {
  Json c = claim("info_complete");
  c["observables"] = names(a, b);
  const std::size_t rank = effect_span_rank(a, b, k), required = AffineChart(k).size();
  c["holds"] = rank == required;
  c["rank"] = rank;
  c["required"] = required;
  return c;
}

Json complementary_claim(const Observable& a, const Observable& b, const StateSpace& k) {
  Json c = claim("complementary");
  c["observables"] = names(a, b);
  try {
    c["holds"] = are_complementary(a, b, k);
  } catch (const UnsupportedGeometry& e) {
    c["unsupported"] = e.what();
  }
  return c;
}

Json surjective_claim(const Observable& o, const StateSpace& k) {
  Json c = claim("surjective");
  c["observable"] = o.name;
  c["holds"] = is_surjective(o, k);
  Json maxima = Json::array();
  for (const auto& f : o.effects) maxima.push_back(extremal_range(k, f).max.to_string());
  c["effect_maxima"] = std::move(maxima);
  return c;
}

Json faithful_choice_claim(const Observable& a, const Observable& b, const StateSpace& k) {
  Json c = claim("faithful_choice");
  c["observables"] = names(a, b);
  FaithfulChoice f = faithful_choice_possible(a, b, k);
  c["holds"] = f.possible;
  c["free_parameters"] = f.free_parameters;
  c["deficit"] = f.deficit;
  return c;
}

Json positive_member_claim(const Observable& a, const Observable& b, const StateSpace& k) {
  Json c = claim("positive_member");
  c["observables"] = names(a, b);
  if (!k.is_polytope()) {
    c["unsupported"] = "positive member search needs a polytope";
    return c;
  }
  Anchor anchor = default_anchor(a, b);
  c["anchor"] = Json::array({anchor.a, anchor.b});
  PositiveMemberSearch s = find_positive_member(a, b, k, anchor);
  c["holds"] = s.rep.has_value();
  if (s.rep)
    c["grid"] = encode(s.rep->grid);
  else
    c["certificate"] = encode(*s.certificate);
  return c;
}

Json positivity_claim(const WignerRep& w, const StateSpace& k) {
  Json c = claim("positivity");
  c["representation"] = w.name;
  PositivityResult p = is_positive(w, k);
  c["holds"] = p.positive;
  if (!p.positive) {
    c["entry"] = Json::array({p.entry->first, p.entry->second});
    if (p.vertex) c["vertex"] = *p.vertex;
    if (p.witness) c[p.witness_is_direction ? "direction" : "witness"] = encode(*p.witness);
  }
  c["minimum"] = p.value.to_string();
  return c;
}

Json faithfulness_claim(const WignerRep& w, const StateSpace& k) {
  Json c = claim("faithfulness");
  c["representation"] = w.name;
  FaithfulnessResult f = is_faithful(w, k);
  c["holds"] = f.faithful;
  c["rank"] = f.rank;
  c["required"] = f.required;
  return c;
}

Json lifted_claim(const WignerRep& w, const StateSpace& k, const PhasePointMap& phi) {
  Json c = claim("lifted_symmetry");
  c["representation"] = w.name;
  c["map"] = encode(phi);
  if (!k.is_polytope()) {
    SymmetryCheck s = is_symmetry(w, k, lift(phi));
    c["holds"] = s.symmetric;
    if (s.image) c["image"] = encode(unflatten(*s.image, w.rows(), w.cols()));
    return c;
  }
  const auto images = vertex_images(w, k);
  const AffineMap lambda = lift(phi);
  Json weights = Json::array();
  for (std::size_t v = 0; v < images.size(); ++v) {
    Vector y = lambda(images[v]);
    FeasibilityResult r = lp_feasible(hull_membership_program(images, y));
    if (r.feasible()) {
      weights.push_back(encode(r.witness()));
      continue;
    }
    c["holds"] = false;
    c["vertex"] = v;
    c["image"] = encode(unflatten(y, w.rows(), w.cols()));
    c["certificate"] = encode(r.certificate());
    return c;
  }
  c["holds"] = true;
  c["weights"] = std::move(weights);
  return c;
}

Json transported_claim(const WignerRep& w, const StateSpace& k, const PhasePointMap& phi) {
  Json c = claim("transported");
  c["representation"] = w.name;
  c["map"] = encode(phi);
  ChannelSearch s = find_transported_channel(w, k, lift(phi));
  c["holds"] = s.found();
  if (s.found()) {
    c["channel"] = encode(s.channel->map());
    c["containment"] = containment_evidence(k, s.channel->map(), k);
  } else {
    c["certificate"] = encode(*s.certificate);
  }
  return c;
}

// Weights placing x in a polytope; empty for balls.
Json membership_evidence(const StateSpace& k, const Vector& x) {
  if (!k.is_polytope()) return Json::array();
  FeasibilityResult r = lp_feasible(hull_membership_program(k.vertices(), x));
  if (!r.feasible()) throw Error("witness point is outside the state space");
  return encode(r.witness());
}

bool check_membership(const StateSpace& k, const Vector& x, const Json& evidence, const Reader& r,
                      const std::string& path) {
  if (!k.is_polytope()) return contains(k, x);
  Vector w = r.vector(evidence, path, k.vertices().size());
  return satisfies(hull_membership_program(k.vertices(), x), w);
}

Json channel_symmetry_claim(const WignerRep& w, const StateSpace& k, const NamedChannel& ch) {
  Json c = claim("channel_symmetry");
  c["representation"] = w.name;
  c["channel"] = ch.name;
  c["containment"] = containment_evidence(k, ch.map, k);
  SymmetryForChannel s = find_symmetry_for_channel(w, k, Channel::certify(k, ch.map, k));
  c["holds"] = s.found();
  if (s.found()) {
    c["map"] = encode(*s.map);
  } else {
    const auto& [x, y] = *s.witness;
    c["witness"] = Json::array({encode(x), encode(y)});
    if (s.witness_vertices)
      c["witness_vertices"] = Json::array({s.witness_vertices->first, s.witness_vertices->second});
    c["membership"] = Json::array({membership_evidence(k, x), membership_evidence(k, y)});
  }
  return c;
}

Json induced_claim(const WignerRep& w, const StateSpace& k, const NamedChannel& ch) {
  Json c = claim("induced_action");
  c["representation"] = w.name;
  c["channel"] = ch.name;
  c["action"] = encode(*ch.action);
  const PhasePointMap phi = phase_map(*ch.action);
  const bool faithful = is_faithful(w, k).faithful;
  const bool eqs = equations_hold(k, ch.map, transported_equations(w, k, lift(phi)));
  const bool inside = map_into(k, ch.map, k).contained;
  c["holds"] = faithful && eqs && inside;
  c["faithful"] = faithful;
  c["intertwines"] = eqs;
  if (inside) c["containment"] = containment_evidence(k, ch.map, k);
  return c;
}

std::size_t closure_size(const std::vector<PhasePointMap>& gens, std::size_t rows, std::size_t cols) {
  std::vector<PhasePointMap> group{PhasePointMap::identity(rows, cols)};
  std::set<std::vector<std::size_t>> seen{group.front().table};
  for (std::size_t i = 0; i < group.size(); ++i)
    for (const auto& s : gens) {
      PhasePointMap next = compose(s, group[i]);
      if (seen.insert(next.table).second) group.push_back(std::move(next));
    }
  return group.size();
}

Json group_claim(const WignerRep& w, const StateSpace& k, const std::vector<PhasePointMap>& gens) {
  Json c = claim("group_symmetric");
  c["representation"] = w.name;
  c["group_size"] = closure_size(gens, w.rows(), w.cols());
  Json list = Json::array();
  bool holds = true;
  for (const auto& g : gens) {
    list.push_back(lifted_claim(w, k, g));
    holds = holds && list.back()["holds"].get<bool>();
  }
  c["holds"] = holds;
  c["generators"] = std::move(list);
  return c;
}

Json channel_entry(const GroupChannel& g, const StateSpace& k) {
  Json e = Json::object();
  e["action"] = encode(g.element);
  Json m = encode(g.map);
  e["matrix"] = std::move(m["matrix"]);
  e["offset"] = std::move(m["offset"]);
  e["containment"] = containment_evidence(k, g.map, k);
  return e;
}

std::vector<GroupChannel> matching_channels(const TheoryDocument& doc, const Observable& a,
                                            const Observable& b) {
  std::vector<GroupChannel> out;
  for (const auto& c : doc.group_channels())
    if (c.element.g1.size() == a.size() && c.element.g2.size() == b.size()) out.push_back(c);
  return out;
}

void add_pair_claims(Json& claims, const Observable& a, const Observable& b, const StateSpace& k) {
  claims.push_back(info_complete_claim(a, b, k));
  claims.push_back(complementary_claim(a, b, k));
  claims.push_back(surjective_claim(a, k));
  claims.push_back(surjective_claim(b, k));
}

}  // namespace

// ---------------------------------------------------------------------------
// Commands

Report validate_report(const TheoryDocument& doc) {
  Json r = start("validate", doc);
  Json& claims = r["claims"];
  claims.push_back(effects_claim(doc.theory));
  bool ok = claims.back()["holds"].get<bool>();
  for (const auto& w : doc.representations) {
    claims.push_back(marginals_claim(w, doc.theory.state_space));
    ok = ok && claims.back()["holds"].get<bool>();
  }
  return finish(std::move(r), ok);
}

Report analyze_report(const TheoryDocument& doc, const PairSelection& pair) {
  const auto [a, b] = select(doc.theory, pair);
  const StateSpace& k = doc.theory.state_space;
  Json r = start("analyze", doc);
  r["observables"] = names(a, b);
  Json& claims = r["claims"];
  claims.push_back(compatibility_claim(a, b, k));
  claims.push_back(positive_member_claim(a, b, k));
  add_pair_claims(claims, a, b, k);
  claims.push_back(faithful_choice_claim(a, b, k));
  return finish(std::move(r), true);
}

TheoryDocument with_representation(const TheoryDocument& doc, const WignerRequest& request) {
  const auto [a, b] = select(doc.theory, request.pair);
  const StateSpace& k = doc.theory.state_space;
  const Anchor anchor = default_anchor(a, b);
  WignerRep w;
  switch (request.mode) {
    case WignerRequest::Mode::free: {
      auto free = parse_functionals(request.free, k.ambient_dimension());
      if (free.size() != free_parameter_count(a, b))
        throw PreconditionError("expected " + std::to_string(free_parameter_count(a, b)) +
                                " free functionals, got " + std::to_string(free.size()));
      w = construct_family(a, b, anchor, free, request.name);
      break;
    }
    case WignerRequest::Mode::faithful:
      w = faithful_completion(a, b, k, anchor, request.name);
      break;
    case WignerRequest::Mode::degenerate:
      w = degenerate_rep(a, b, anchor, request.name);
      break;
  }
  TheoryDocument out = doc;
  auto it = std::find_if(out.representations.begin(), out.representations.end(),
                         [&](const WignerRep& x) { return x.name == request.name; });
  if (it != out.representations.end())
    *it = std::move(w);
  else
    out.representations.push_back(std::move(w));
  return out;
}

Report wigner_report(const TheoryDocument& doc, const WignerRequest& request) {
  TheoryDocument out = with_representation(doc, request);
  const WignerRep& w = out.rep(request.name);
  const StateSpace& k = out.theory.state_space;
  Json r = start("wigner", out);
  r["representation"] = w.name;
  Json& claims = r["claims"];
  claims.push_back(marginals_claim(w, k));
  const bool ok = claims.back()["holds"].get<bool>();
  claims.push_back(positivity_claim(w, k));
  claims.push_back(faithfulness_claim(w, k));
  return finish(std::move(r), ok);
}

Report symmetries_report(const TheoryDocument& doc, const std::string& rep,
                         const std::string& channel) {
  const WignerRep& w = doc.rep(rep);
  const StateSpace& k = doc.theory.state_space;
  Json r = start("symmetries", doc);
  r["representation"] = w.name;
  Json& claims = r["claims"];
  bool ok = true;

  const bool ball_unsupported = k.is_ball() && !is_faithful(w, k).faithful;
  if (ball_unsupported) {
    Json c = claim("lifted_symmetries");
    c["representation"] = w.name;
    c["unsupported"] = "unsupported: ball symmetry needs faithful W";
    claims.push_back(std::move(c));
  } else if (w.phase_points() <= 8) {
    const auto found = enumerate_lifted_symmetries(w, k);
    const bool complete = w.phase_points() <= kMaxExhaustiveEvidence;
    Json summary = claim("lifted_symmetries");
    summary["representation"] = w.name;
    summary["complete"] = complete;
    Json tables = Json::array();
    for (const auto& phi : found) tables.push_back(encode(phi));
    summary["symmetries"] = std::move(tables);
    summary["holds"] = true;
    claims.push_back(std::move(summary));
    if (complete) {
      std::vector<std::size_t> perm(w.phase_points());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      do {
        claims.push_back(lifted_claim(w, k, PhasePointMap{w.rows(), w.cols(), perm}));
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (const auto& phi : found) claims.push_back(lifted_claim(w, k, phi));
    }
    if (k.is_polytope())
      for (const auto& phi : found) claims.push_back(transported_claim(w, k, phi));
  }

  std::vector<PhasePointMap> gens;
  for (const auto& ch : doc.channels) {
    if (!ch.action || ch.action->g1.size() != w.rows() || ch.action->g2.size() != w.cols()) continue;
    if (ch.action->g1.size() != doc.theory.observables[0].size()) continue;
    gens.push_back(phase_map(*ch.action));
    if (!ball_unsupported) claims.push_back(induced_claim(w, k, ch));
  }
  if (!gens.empty() && !ball_unsupported) {
    claims.push_back(group_claim(w, k, gens));
    ok = ok && claims.back()["holds"].get<bool>();
  }

  if (!channel.empty()) {
    claims.push_back(channel_symmetry_claim(w, k, doc.channel(channel)));
    ok = ok && claims.back()["holds"].get<bool>();
  }
  return finish(std::move(r), ok);
}

Report covariant_report(const TheoryDocument& doc, const PairSelection& pair) {
  const auto [a, b] = select(doc.theory, pair);
  const StateSpace& k = doc.theory.state_space;
  Json r = start("covariant", doc);
  r["observables"] = names(a, b);
  Json& claims = r["claims"];
  add_pair_claims(claims, a, b, k);

  const auto supplied = matching_channels(doc, a, b);
  CovariantSolution s = solve_covariant(a, b, k, supplied);
  Json c = claim("covariant");
  c["observables"] = names(a, b);
  c["status"] = status_name(s.status);
  c["holds"] = s.status == CovariantSolution::Status::unique;
  if (!s.message.empty()) c["message"] = s.message;

  const auto gens = product_generators(a.size(), b.size());
  auto generator_channels = [&] {
    Json list = Json::array();
    for (const auto& g : s.channels.channels)
      if (std::find(gens.begin(), gens.end(), g.element) != gens.end())
        list.push_back(channel_entry(g, k));
    return list;
  };

  switch (s.status) {
    case CovariantSolution::Status::hypothesis_failure:
      c["supplied_channels"] = supplied.size();
      break;
    case CovariantSolution::Status::none:
      if (s.channels.failing) {
        c["stage"] = "channels";
        c["failing"] = encode(*s.channels.failing);
        if (s.certificate) c["certificate"] = encode(*s.certificate);
      } else {
        c["stage"] = "covariance";
        c["channels"] = generator_channels();
        c["certificate"] = encode(*s.certificate);
      }
      break;
    case CovariantSolution::Status::unique:
    case CovariantSolution::Status::family: {
      c["channels"] = generator_channels();
      c["grid"] = encode(s.rep->grid);
      Json dirs = Json::array();
      for (const auto& d : s.directions) dirs.push_back(encode(d));
      c["directions"] = std::move(dirs);
      c["verified_symmetric"] = s.verified;
      break;
    }
  }
  const bool ok = s.status == CovariantSolution::Status::unique;
  claims.push_back(std::move(c));
  return finish(std::move(r), ok);
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class Verifier {
 public:
  Verifier(const TheoryDocument& doc, const Reader& r, const Json& claims)
      : doc_(doc), k_(doc.theory.state_space), r_(r), claims_(claims) {}

  // Returns true when the claim is backed; `note` explains a skip or failure.
  bool check(const Json& c, const std::string& path, std::string& note) {
    const std::string type = r_.string(r_.field(c, path, "claim"), child(path, "claim"));
    if (const Json* u = r_.optional_field(c, "unsupported")) {
      note = "skipped: " + r_.string(*u, child(path, "unsupported"));
      return true;
    }
    static const std::map<std::string, bool (Verifier::*)(const Json&, const std::string&, std::string&)>
        checks = {
            {"effects_valid", &Verifier::effects_valid},
            {"marginals", &Verifier::marginals},
            {"compatibility", &Verifier::compatibility},
            {"info_complete", &Verifier::info_complete},
            {"complementary", &Verifier::complementary},
            {"surjective", &Verifier::surjective},
            {"faithful_choice", &Verifier::faithful_choice},
            {"positive_member", &Verifier::positive_member},
            {"positivity", &Verifier::positivity},
            {"faithfulness", &Verifier::faithfulness},
            {"lifted_symmetry", &Verifier::lifted_symmetry},
            {"lifted_symmetries", &Verifier::lifted_symmetries},
            {"transported", &Verifier::transported},
            {"channel_symmetry", &Verifier::channel_symmetry},
            {"induced_action", &Verifier::induced_action},
            {"group_symmetric", &Verifier::group_symmetric},
            {"covariant", &Verifier::covariant},
        };
    auto it = checks.find(type);
    if (it == checks.end()) {
      note = "unknown claim type";
      return false;
    }
    return (this->*(it->second))(c, path, note);
  }

 private:
  bool holds(const Json& c, const std::string& path) const {
    return r_.boolean(r_.field(c, path, "holds"), child(path, "holds"));
  }

  std::pair<Observable, Observable> pair(const Json& c, const std::string& path) const {
    const std::string p = child(path, "observables");
    const Json& n = r_.array(r_.field(c, path, "observables"), p);
    if (n.size() != 2) r_.fail(p, "expected two observable names");
    return {doc_.theory.observable(r_.string(n[0], child(p, 0))),
            doc_.theory.observable(r_.string(n[1], child(p, 1)))};
  }

  const WignerRep& rep(const Json& c, const std::string& path) const {
    return doc_.rep(r_.string(r_.field(c, path, "representation"), child(path, "representation")));
  }

  bool mismatch(std::string& note, const std::string& what) const {
    note = what;
    return false;
  }

  bool effects_valid(const Json& c, const std::string& path, std::string& note) {
    const auto vs = validate(doc_.theory);
    if (holds(c, path) != vs.empty()) return mismatch(note, "verdict differs on recomputation");
    if (r_.array(r_.field(c, path, "violations"), child(path, "violations")).size() != vs.size())
      return mismatch(note, "violation count differs");
    note = "recomputed";
    return true;
  }

  bool marginals(const Json& c, const std::string& path, std::string& note) {
    if (holds(c, path) != !check_marginals(rep(c, path), k_).has_value())
      return mismatch(note, "verdict differs on recomputation");
    note = "recomputed";
    return true;
  }

  bool compatibility(const Json& c, const std::string& path, std::string& note) {
    const auto [a, b] = pair(c, path);
    if (holds(c, path)) {
      FunctionalGrid g = r_.grid(r_.field(c, path, "joint"), child(path, "joint"), k_.ambient_dimension());
      WignerRep joint{"joint", a, b, g};
      if (joint.rows() != a.size() || joint.cols() != b.size())
        return mismatch(note, "joint observable has the wrong shape");
      if (check_marginals(joint, k_)) return mismatch(note, "joint marginals differ");
      if (!nonnegative_on_vertices(g, k_)) return mismatch(note, "joint effect is negative");
      note = "witness";
      return true;
    }
    auto cert = r_.certificate(r_.field(c, path, "certificate"), child(path, "certificate"));
    if (!verifies(compatibility_program(a, b, k_), cert)) return mismatch(note, "certificate fails");
    note = "certificate";
    return true;
  }

  bool info_complete(const Json& c, const std::string& path, std::string& note) {
    const auto [a, b] = pair(c, path);
    if (holds(c, path) != jointly_info_complete(a, b, k_))
      return mismatch(note, "verdict differs on recomputation");
    note = "recomputed";
    return true;
  }

  bool complementary(const Json& c, const std::string& path, std::string& note) {
    const auto [a, b] = pair(c, path);
    if (holds(c, path) != are_complementary(a, b, k_))
      return mismatch(note, "verdict differs on recomputation");
    note = "recomputed";
    return true;
  }

  bool surjective(const Json& c, const std::string& path, std::string& note) {
    const Observable& o =
        doc_.theory.observable(r_.string(r_.field(c, path, "observable"), child(path, "observable")));
    if (holds(c, path) != is_surjective(o, k_)) return mismatch(note, "verdict differs on recomputation");
    note = "recomputed";
    return true;
  }

  bool faithful_choice(const Json& c, const std::string& path, std::string& note) {
    const auto [a, b] = pair(c, path);
    FaithfulChoice f = faithful_choice_possible(a, b, k_);
    if (holds(c, path) != f.possible) return mismatch(note, "verdict differs on recomputation");
    note = "recomputed";
    return true;
  }

  bool positive_member(const Json& c, const std::string& path, std::string& note) {
    const auto [a, b] = pair(c, path);
    const std::string ap = child(path, "anchor");
    const Json& an = r_.array(r_.field(c, path, "anchor"), ap);
    if (an.size() != 2) r_.fail(ap, "expected two indices");
    Anchor anchor{r_.index(an[0], child(ap, 0)), r_.index(an[1], child(ap, 1))};
    if (anchor.a >= a.size() || anchor.b >= b.size()) r_.fail(ap, "anchor out of range");
    if (holds(c, path)) {
      FunctionalGrid g = r_.grid(r_.field(c, path, "grid"), child(path, "grid"), k_.ambient_dimension());
      WignerRep w{"positive", a, b, g};
      if (w.rows() != a.size() || w.cols() != b.size()) return mismatch(note, "grid has the wrong shape");
      if (check_marginals(w, k_)) return mismatch(note, "marginals differ");
      if (!nonnegative_on_vertices(g, k_)) return mismatch(note, "grid is negative at a vertex");
      note = "witness";
      return true;
    }
    auto cert = r_.certificate(r_.field(c, path, "certificate"), child(path, "certificate"));
    if (!verifies(positive_member_program(a, b, k_, anchor), cert))
      return mismatch(note, "certificate fails");
    note = "certificate";
    return true;
  }

  bool positivity(const Json& c, const std::string& path, std::string& note) {
    PositivityResult p = is_positive(rep(c, path), k_);
    if (holds(c, path) != p.positive) return mismatch(note, "verdict differs on recomputation");
    if (r_.string(r_.field(c, path, "minimum"), child(path, "minimum")) != p.value.to_string())
      return mismatch(note, "minimum differs");
    note = "recomputed";
    return true;
  }

  bool faithfulness(const Json& c, const std::string& path, std::string& note) {
    FaithfulnessResult f = is_faithful(rep(c, path), k_);
    if (holds(c, path) != f.faithful) return mismatch(note, "verdict differs on recomputation");
    if (r_.index(r_.field(c, path, "rank"), child(path, "rank")) != f.rank)
      return mismatch(note, "rank differs");
    note = "recomputed";
    return true;
  }

  PhasePointMap table(const Json& c, const std::string& path, const WignerRep& w) const {
    PhasePointMap phi = r_.phase_point_map(r_.field(c, path, "map"), child(path, "map"), w.rows(), w.cols());
    if (!phi.is_permutation()) r_.fail(child(path, "map"), "not a permutation");
    return phi;
  }

  bool lifted_symmetry(const Json& c, const std::string& path, std::string& note) {
    const WignerRep& w = rep(c, path);
    const PhasePointMap phi = table(c, path, w);
    const AffineMap lambda = lift(phi);
    if (!k_.is_polytope()) {
      if (holds(c, path) != is_symmetry(w, k_, lambda).symmetric)
        return mismatch(note, "verdict differs on recomputation");
      note = "recomputed";
      return true;
    }
    const auto images = vertex_images(w, k_);
    if (holds(c, path)) {
      const std::string wp = child(path, "weights");
      const Json& ws = r_.array(r_.field(c, path, "weights"), wp);
      if (ws.size() != images.size()) return mismatch(note, "one weight vector per vertex expected");
      for (std::size_t v = 0; v < images.size(); ++v) {
        Vector lam = r_.vector(ws[v], child(wp, v), images.size());
        if (!satisfies(hull_membership_program(images, lambda(images[v])), lam))
          return mismatch(note, "weights do not reproduce the image of vertex " + std::to_string(v));
      }
      note = "witness";
      return true;
    }
    const std::size_t v = r_.index(r_.field(c, path, "vertex"), child(path, "vertex"));
    if (v >= images.size()) r_.fail(child(path, "vertex"), "vertex out of range");
    const Vector y = lambda(images[v]);
    if (flatten(r_.signed_grid(r_.field(c, path, "image"), child(path, "image"))) != y)
      return mismatch(note, "stated image differs");
    auto cert = r_.certificate(r_.field(c, path, "certificate"), child(path, "certificate"));
    if (!verifies(hull_membership_program(images, y), cert)) return mismatch(note, "certificate fails");
    note = "certificate";
    return true;
  }

  bool lifted_symmetries(const Json& c, const std::string& path, std::string& note) {
    const WignerRep& w = rep(c, path);
    const std::string sp = child(path, "symmetries");
    const Json& list = r_.array(r_.field(c, path, "symmetries"), sp);
    std::set<std::vector<std::size_t>> listed;
    for (std::size_t i = 0; i < list.size(); ++i)
      listed.insert(r_.phase_point_map(list[i], child(sp, i), w.rows(), w.cols()).table);

    // Every listed map, and with `complete` every permutation, must have a
    // backing lifted_symmetry claim in this report.
    std::map<std::vector<std::size_t>, bool> backed;
    for (std::size_t i = 0; i < claims_.size(); ++i) {
      const Json& o = claims_[i];
      if (!o.is_object() || o.value("claim", "") != "lifted_symmetry" ||
          o.value("representation", "") != w.name)
        continue;
      const std::string op = child("claims", i);
      std::string sub;
      if (!lifted_symmetry(o, op, sub)) return mismatch(note, "backing claim " + op + " fails");
      backed[table(o, op, w).table] = holds(o, op);
    }
    for (const auto& t : listed)
      if (!backed.count(t) || !backed[t]) return mismatch(note, "listed map lacks a witness");
    if (r_.boolean(r_.field(c, path, "complete"), child(path, "complete"))) {
      std::size_t total = 1;
      for (std::size_t i = 2; i <= w.phase_points(); ++i) total *= i;
      if (backed.size() != total) return mismatch(note, "enumeration evidence is incomplete");
      for (const auto& [t, ok] : backed)
        if (ok != static_cast<bool>(listed.count(t))) return mismatch(note, "symmetric map not listed");
    }
    // The summary asserts that its list is right; the checks above confirm it.
    if (!holds(c, path)) return mismatch(note, "verdict differs on recomputation");
    note = "backed by per-map claims";
    return true;
  }

  bool transported(const Json& c, const std::string& path, std::string& note) {
    const WignerRep& w = rep(c, path);
    const auto eqs = transported_equations(w, k_, lift(table(c, path, w)));
    const std::size_t n = k_.ambient_dimension();
    if (holds(c, path)) {
      AffineMap m = r_.map(r_.field(c, path, "channel"), child(path, "channel"), n, n);
      if (!equations_hold(k_, m, eqs)) return mismatch(note, "channel does not intertwine");
      if (!check_containment(k_, m, k_, r_.field(c, path, "containment"), r_, child(path, "containment")))
        return mismatch(note, "channel leaves the state space");
      note = "witness";
      return true;
    }
    auto cert = r_.certificate(r_.field(c, path, "certificate"), child(path, "certificate"));
    if (!verifies(channel_program(k_, k_, eqs), cert)) return mismatch(note, "certificate fails");
    note = "certificate";
    return true;
  }

  bool channel_symmetry(const Json& c, const std::string& path, std::string& note) {
    const WignerRep& w = rep(c, path);
    const NamedChannel& ch =
        doc_.channel(r_.string(r_.field(c, path, "channel"), child(path, "channel")));
    if (!check_containment(k_, ch.map, k_, r_.field(c, path, "containment"), r_, child(path, "containment")))
      return mismatch(note, "channel leaves the state space");
    if (holds(c, path)) {
      const std::size_t n = w.phase_points();
      AffineMap lambda = r_.map(r_.field(c, path, "map"), child(path, "map"), n, n);
      if (!equations_hold(k_, ch.map, transported_equations(w, k_, lambda)))
        return mismatch(note, "grid map does not intertwine");
      note = "witness";
      return true;
    }
    const std::string wp = child(path, "witness"), mp = child(path, "membership");
    const Json& pts = r_.array(r_.field(c, path, "witness"), wp);
    const Json& mem = r_.array(r_.field(c, path, "membership"), mp);
    if (pts.size() != 2 || mem.size() != 2) r_.fail(wp, "expected a pair");
    Vector x = r_.vector(pts[0], child(wp, 0), k_.ambient_dimension());
    Vector y = r_.vector(pts[1], child(wp, 1), k_.ambient_dimension());
    if (!check_membership(k_, x, mem[0], r_, child(mp, 0)) ||
        !check_membership(k_, y, mem[1], r_, child(mp, 1)))
      return mismatch(note, "witness is outside the state space");
    if (evaluate_flat(w, x) != evaluate_flat(w, y)) return mismatch(note, "W separates the pair");
    if (evaluate_flat(w, ch.map(x)) == evaluate_flat(w, ch.map(y)))
      return mismatch(note, "images are not separated");
    note = "witness";
    return true;
  }

  bool induced_action(const Json& c, const std::string& path, std::string& note) {
    const WignerRep& w = rep(c, path);
    const NamedChannel& ch =
        doc_.channel(r_.string(r_.field(c, path, "channel"), child(path, "channel")));
    ProductPermutation g = r_.product_permutation(r_.field(c, path, "action"), child(path, "action"),
                                                  w.rows(), w.cols());
    const bool faithful = is_faithful(w, k_).faithful;
    const bool eqs = equations_hold(k_, ch.map, transported_equations(w, k_, lift(phase_map(g))));
    if (holds(c, path)) {
      if (!faithful || !eqs) return mismatch(note, "W is not faithful or does not intertwine");
      if (!check_containment(k_, ch.map, k_, r_.field(c, path, "containment"), r_,
                             child(path, "containment")))
        return mismatch(note, "channel leaves the state space");
      note = "witness";
      return true;
    }
    if (faithful && eqs) return mismatch(note, "negative verdict rests on containment alone");
    note = "recomputed";
    return true;
  }

  bool group_symmetric(const Json& c, const std::string& path, std::string& note) {
    const WignerRep& w = rep(c, path);
    const std::string gp = child(path, "generators");
    const Json& gens = r_.array(r_.field(c, path, "generators"), gp);
    std::vector<PhasePointMap> maps;
    bool all = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string sub;
      if (!lifted_symmetry(gens[i], child(gp, i), sub)) return mismatch(note, "generator " + std::to_string(i) + ": " + sub);
      maps.push_back(table(gens[i], child(gp, i), w));
      all = all && holds(gens[i], child(gp, i));
    }
    if (holds(c, path) != all) return mismatch(note, "verdict does not follow from the generators");
    if (r_.index(r_.field(c, path, "group_size"), child(path, "group_size")) !=
        closure_size(maps, w.rows(), w.cols()))
      return mismatch(note, "group size differs");
    note = "witness";
    return true;
  }

  std::vector<GroupChannel> read_channels(const Json& c, const std::string& path,
                                          const Observable& a, const Observable& b, std::string& note,
                                          bool& ok) const {
    const std::string cp = child(path, "channels");
    const Json& list = r_.array(r_.field(c, path, "channels"), cp);
    const std::size_t n = k_.ambient_dimension();
    std::vector<GroupChannel> out;
    ok = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string ep = child(cp, i);
      GroupChannel g{r_.product_permutation(r_.field(list[i], ep, "action"), child(ep, "action"),
                                            a.size(), b.size()),
                     r_.map(list[i], ep, n, n)};
      if (!equations_hold(k_, g.map, permutation_equations(a, b, g.element))) {
        note = ep + " does not realise its permutation";
        ok = false;
      } else if (!check_containment(k_, g.map, k_, r_.field(list[i], ep, "containment"), r_,
                                    child(ep, "containment"))) {
        note = ep + " leaves the state space";
        ok = false;
      }
      out.push_back(std::move(g));
    }
    return out;
  }

  bool covariant(const Json& c, const std::string& path, std::string& note) {
    const auto [a, b] = pair(c, path);
    const std::string status = r_.string(r_.field(c, path, "status"), child(path, "status"));
    if (holds(c, path) != (status == "unique")) return mismatch(note, "verdict and status disagree");

    if (status == "hypothesis_failure") {
      if (jointly_info_complete(a, b, k_)) return mismatch(note, "observables are info-complete");
      note = "recomputed";
      return true;
    }
    if (status == "none" && r_.string(r_.field(c, path, "stage"), child(path, "stage")) == "channels") {
      ProductPermutation g = r_.product_permutation(r_.field(c, path, "failing"), child(path, "failing"),
                                                    a.size(), b.size());
      const Json* cert = r_.optional_field(c, "certificate");
      if (!cert) return mismatch(note, "no certificate for the failing generator");
      auto cc = r_.certificate(*cert, child(path, "certificate"));
      if (!verifies(channel_program(k_, k_, permutation_equations(a, b, g)), cc))
        return mismatch(note, "certificate fails");
      note = "certificate";
      return true;
    }

    bool ok = true;
    const auto channels = read_channels(c, path, a, b, note, ok);
    if (!ok) return false;
    const LinearProgram sys = covariant_system(a, b, k_, channels);
    if (status == "none") {
      auto cc = r_.certificate(r_.field(c, path, "certificate"), child(path, "certificate"));
      if (!verifies(sys, cc)) return mismatch(note, "certificate fails");
      note = "certificate";
      return true;
    }

    // unique or family: the grid solves the system and the nullity matches.
    const std::size_t dim = k_.ambient_dimension();
    FunctionalGrid g = r_.grid(r_.field(c, path, "grid"), child(path, "grid"), dim);
    AffineChart chart(k_);
    auto coords = [&](const FunctionalGrid& grid) {
      Vector x;
      for (const auto& row : grid)
        for (const auto& f : row)
          for (const auto& v : chart.coordinates(f)) x.push_back(v);
      return x;
    };
    if (g.size() != a.size() || g.front().size() != b.size()) return mismatch(note, "grid has the wrong shape");
    if (!satisfies(sys, coords(g))) return mismatch(note, "grid violates the covariance system");
    const std::string dp = child(path, "directions");
    const Json& dirs = r_.array(r_.field(c, path, "directions"), dp);
    LinearProgram homogeneous = sys;
    for (auto& e : homogeneous.equalities) e.rhs = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      if (!satisfies(homogeneous, coords(r_.grid(dirs[i], child(dp, i), dim))))
        return mismatch(note, "direction is not in the nullspace");
    Matrix m(sys.equalities.size(), sys.variables);
    for (std::size_t i = 0; i < sys.equalities.size(); ++i)
      for (std::size_t j = 0; j < sys.variables; ++j) m(i, j) = sys.equalities[i].row[j];
    if (sys.variables - rank(m) != dirs.size()) return mismatch(note, "nullity differs");
    note = "witness";
    return true;
  }

  const TheoryDocument& doc_;
  const StateSpace& k_;
  const Reader& r_;
  const Json& claims_;
};

}  // namespace

Report verify_report(std::string_view report_text) {
  const Json report = codec::parse_json(report_text);
  const codec::LineIndex index(report_text);
  const Reader r(&index);
  const Json& theory = r.field(report, "", "theory");
  const TheoryDocument doc = parse_document(theory.dump());
  const Json& claims = r.array(r.field(report, "", "claims"), "claims");

  Json out = Json::object();
  out["command"] = "verify";
  if (const Json* cmd = r.optional_field(report, "command")) out["source"] = *cmd;
  Json results = Json::array();
  Verifier v(doc, r, claims);
  bool all = true;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const std::string path = child("claims", i);
    std::string note;
    bool ok = false;
    try {
      ok = v.check(claims[i], path, note);
    } catch (const ParseError& e) {
      // A claim without the evidence its verdict needs fails on its own.
      note = std::string("malformed claim: ") + e.what();
    } catch (const Error& e) {
      note = e.what();
    }
    Json e = Json::object();
    e["claim"] = claims[i].value("claim", "");
    e["verified"] = ok;
    e["note"] = note;
    results.push_back(std::move(e));
    all = all && ok;
  }
  out["checked"] = claims.size();
  out["claims"] = std::move(results);
  out["verdict"] = all ? "positive" : "negative";
  return {codec::dump(out), all};
}

}  // namespace wignerlab
