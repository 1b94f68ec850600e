#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "asymk/asymk.hpp"
#include "io.hpp"

namespace asymk::cli {

namespace {

using io::Json;
using io::toJson;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) bad(std::string("missing required option ") + flag);
  if (*v < 1) bad(std::string(flag) + " must be at least 1");
  return *v;
}

MatrixConfig loadConfig(const JobSpec& spec) {
  if (spec.matrixPath.empty()) bad("missing required option --matrix");
  return buildConfig(io::matrixFromJson(io::readFile(spec.matrixPath)));
}

LaurentPoly loadPoly(const JobSpec& spec, const MatrixConfig& config) {
  if (!spec.polyPath) return LaurentPoly::constant(config.d, 1);
  return io::polyFromJson(io::readFile(*spec.polyPath), config.d);
}

Json ratVector(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(toJson(x));
  return a;
}

Json intVector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(toJson(x));
  return a;
}

Json points(const std::vector<Exponent>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(toJson(p));
  return a;
}

Json intMatrix(const IntMatrix& m) { return io::matrixToJson(m).at("matrix"); }

Json witnessJson(const ConcavityWitness& w) {
  Json j{{"kind", w.kind}, {"u", toJson(w.u)}, {"w", toJson(w.w)}, {"v", toJson(w.v)}};
  if (w.kind == "superlevel") {
    j["support"] = points(w.support);
    j["gw"] = toJson(w.gw);
  } else if (w.kind == "negative" || w.kind == "nonpositive") {
    j["gw"] = toJson(w.gw);
  } else {
    j["q"] = w.q;
    j["a"] = w.a;
    j["gu"] = toJson(w.gu);
    j["gw"] = toJson(w.gw);
    j["gv"] = toJson(w.gv);
    j["lhs"] = toJson(w.lhs);
    j["rhs"] = toJson(w.rhs);
  }
  return j;
}

Json verdictJson(const ConcavityVerdict& v) {
  Json j{{"holds", v.holds}};
  j["witness"] = v.witness ? witnessJson(*v.witness) : Json(nullptr);
  return j;
}

Outcome analyze(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  Json out;
  out["d"] = c.d;
  out["n"] = c.n;
  out["rank"] = c.rank;
  out["latticeIndex"] = toJson(c.latticeIndex);
  out["kernelBasis"] = points(c.kernelBasis);
  out["positiveFunctional"] = ratVector(c.positiveFunctional);
  out["weights"] = toJson(c.weights);
  try {
    out["totallyUnimodular"] = isTotallyUnimodular(c.entries, spec.limits);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimit) throw;
    out["totallyUnimodular"] = nullptr;
  }
  Zonotope z = zonotopeBuild(c, spec.limits);
  DegeneracyResult deg = isDegenerate(c, z);
  out["degenerate"] = deg.degenerate;
  out["degeneracyWitness"] = deg.degenerate ? toJson(deg.witness) : Json(nullptr);
  out["zonotope"] = Json{{"vertices", points(z.vertices)},
                         {"latticePointCount", z.latticePoints.size()},
                         {"interiorLatticePoints", points(z.interiorLatticePoints)}};
  GaleBlocks g = galeBlocks(c);
  Json perm = Json::array();
  for (auto k : g.columnPermutation) perm.push_back(k + 1);
  Json failing = Json::array();
  for (const auto& name : checkGaleIdentities(g)) failing.push_back(name);
  out["blocks"] = Json{{"V", intMatrix(g.rowChange)}, {"H", intMatrix(g.H)}, {"Bprime", intMatrix(g.Bprime)},
                       {"columnOrder", perm}, {"scale", toJson(g.scale)}, {"failingIdentities", failing}};
  return {kOk, out.dump(2)};
}

Outcome kpoly(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  AsymptoticResult k = kPolynomial(c, spec.limits);
  Json per = Json::array();
  for (const auto& [u, vol] : k.perPoint) per.push_back(Json{{"u", toJson(u)}, {"volume", toJson(vol)}});
  Json out{{"kPoly", toJson(k.kPoly)},
           {"sum", k.coefficientSum.get_str()},
           {"coefficientSum", toJson(k.coefficientSum)},
           {"latticeSum", toJson(k.latticeSum)},
           {"statedSum", toJson(k.statedSum)},
           {"latticeIndex", toJson(k.m)},
           {"nMinusD", k.nMinusD},
           {"perPoint", per}};
  return {kOk, out.dump(2)};
}

Outcome phiCommand(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  LaurentPoly f = loadPoly(spec, c);
  const std::int64_t r = need(spec.r, "--r");
  PhiMethod method;
  if (spec.method == "count") {
    method = PhiMethod::Count;
  } else if (spec.method == "geometric") {
    method = PhiMethod::Geometric;
  } else {
    bad("--method must be count or geometric");
  }
  Json out{{"r", r}, {"method", spec.method}, {"phi", toJson(phi(f, c, r, method, spec.limits))}};
  return {kOk, out.dump(2)};
}

Outcome expand(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  LaurentPoly f = loadPoly(spec, c);
  if (!spec.bound) bad("missing required option --bound");
  Rational bound;
  if (bound.set_str(*spec.bound, 10) != 0) bad("--bound must be an integer or p/q");
  bound.canonicalize();
  if (bound < 0) bad("--bound must be nonnegative");
  SeriesBox box = seriesExpand(f, c, bound, spec.limits);
  LaurentPoly coeffs(c.d);
  for (const auto& [w, q] : box.coefficients) coeffs.addTerm(w, q);
  Json out{{"bound", toJson(box.bound)},
           {"functional", ratVector(c.positiveFunctional)},
           {"weightCut", box.weightCut},
           {"coefficients", toJson(coeffs)}};
  return {kOk, out.dump(2)};
}

Outcome concavity(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  LaurentPoly f = spec.polyPath ? loadPoly(spec, c) : kPolynomial(c, spec.limits).kPoly;
  ConcavityVerdict lc = isLogConcave(f, spec.limits);
  ConcavityVerdict qc = isQuasiConcave(f, spec.limits);
  Json out{{"subject", spec.polyPath ? "poly" : "kPoly"},
           {"poly", toJson(f)},
           {"logConcave", verdictJson(lc)},
           {"quasiConcave", verdictJson(qc)}};
  return {lc.holds && qc.holds ? kOk : kCheckFailed, out.dump(2)};
}

Outcome carries(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  const std::int64_t r = need(spec.r, "--r");
  CarriesOptions options;
  options.allowOffStride = spec.allowOffStride;
  if (spec.orderPath) {
    Json j = io::readFile(*spec.orderPath);
    if (j.is_object() && j.contains("index")) j = j.at("index");
    if (!j.is_array()) bad("order file must be an array of lattice points");
    std::vector<Exponent> order;
    for (const auto& p : j) order.push_back(io::exponentFromJson(p));
    options.order = std::move(order);
  }
  AsymptoticResult k = kPolynomial(c, spec.limits);
  CarriesMatrix m = buildCarries(c, r, options, spec.limits);
  std::optional<CarriesMatrix> other;
  if (spec.r1) other = buildCarries(c, need(spec.r1, "--r1"), options, spec.limits);
  StochasticReport rep = verifyStochastic(m, k, other ? &*other : nullptr);

  Json eigen = Json::array();
  for (const auto& e : rep.eigen) {
    Json basis = Json::array();
    for (const auto& b : e.basis) basis.push_back(intVector(b));
    eigen.push_back(Json{{"i", e.i}, {"eigenvalue", toJson(e.eigenvalue)}, {"isRoot", e.isRoot},
                         {"nullity", e.nullity}, {"basis", basis}});
  }
  Json out{{"carries", toJson(m)},
           {"columnSums", ratVector(rep.columnSums)},
           {"columnsSumToOne", rep.columnsSumToOne},
           {"stationary", ratVector(rep.stationary)},
           {"stationaryHolds", rep.stationaryHolds},
           {"charpoly", ratVector(rep.charpoly)},
           {"eigen", eigen},
           {"spectrumHolds", rep.spectrumHolds}};
  out["eigenvectorsRIndependent"] = rep.eigenvectorsRIndependent ? Json(*rep.eigenvectorsRIndependent) : Json(nullptr);
  bool pass = rep.allPass();
  if (spec.r1 && spec.r2) {
    SemigroupResult s = semigroupCheck(c, *spec.r1, need(spec.r2, "--r2"), options, spec.limits);
    Json mism = Json::array();
    for (auto [i, j] : s.mismatches) mism.push_back(Json::array({i, j}));
    out["semigroup"] = Json{{"r1", *spec.r1}, {"r2", *spec.r2}, {"equal", s.equal}, {"mismatches", mism}};
    pass = pass && s.equal;
  }
  return {pass ? kOk : kCheckFailed, out.dump(2)};
}

CodimResult loadCodim(const JobSpec& spec, const MatrixConfig& c) {
  return codimAsymptotic(c, io::expansionFromJson(io::readFile(*spec.expansionPath)), spec.limits);
}

Outcome asymptotic(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  if (!spec.expansionPath) bad("missing required option --expansion");
  CodimResult res = loadCodim(spec, c);
  Json idx = Json::array();
  for (const auto& m : res.termIndices) idx.push_back(toJson(m));
  Json out{{"order", res.order}, {"stride", toJson(res.stride)}, {"limit", toJson(res.limit)},
           {"G", toJson(res.G)}, {"termLatticeIndices", idx}};
  return {kOk, out.dump(2)};
}

Outcome convergence(const JobSpec& spec) {
  MatrixConfig c = loadConfig(spec);
  LaurentPoly f = loadPoly(spec, c);
  const std::int64_t rMax = need(spec.rMax, "--rmax");
  ConvergenceOptions options;
  if (spec.expansionPath) {
    CodimResult res = loadCodim(spec, c);
    options.target = res.limit;
    options.order = res.order;
    options.stride = toInt64(res.stride);
  }
  if (spec.stride) options.stride = need(spec.stride, "--stride");
  if (spec.order) {
    if (*spec.order < 0) bad("--order must be nonnegative");
    options.order = static_cast<std::size_t>(*spec.order);
  }
  ConvergenceReport rep = convergenceReport(f, c, rMax, options, spec.limits);

  Json samples = Json::array();
  for (const auto& s : rep.samples) {
    Json j{{"r", s.r}, {"phi", toJson(s.phi)}, {"nonnegative", s.nonnegative},
           {"logConcave", s.logConcave}, {"quasiConcave", s.quasiConcave}};
    if (rep.target) {
      j["maxNorm"] = toJson(s.maxNorm);
      j["residual"] = toJson(s.residual);
      j["residualAtOne"] = toJson(s.residual.evalAtOne());
    }
    samples.push_back(j);
  }
  Json residues = Json::array();
  for (const auto& d : rep.residues) {
    Json norms = Json::array();
    for (const auto& q : d.maxNorms) norms.push_back(toJson(q));
    Json rs = Json::array();
    for (auto r : d.rs) rs.push_back(r);
    residues.push_back(Json{{"residue", d.residue}, {"rs", rs}, {"maxNorms", norms},
                            {"classLimit", d.classLimit ? toJson(*d.classLimit) : Json(nullptr)},
                            {"agreesWithTarget", d.agreesWithTarget}});
  }
  Json out{{"stride", rep.stride},
           {"order", rep.order},
           {"rMax", rep.rMax},
           {"target", rep.target ? toJson(*rep.target) : Json(nullptr)},
           {"samples", samples},
           {"limit", rep.limit ? toJson(*rep.limit) : Json(nullptr)},
           {"limitStep", rep.limitStep},
           {"limitStable", rep.limitStable},
           {"limitMatchesTarget", rep.limitMatchesTarget ? Json(*rep.limitMatchesTarget) : Json(nullptr)},
           {"empiricalR0", rep.empiricalR0 ? Json(*rep.empiricalR0) : Json(nullptr)},
           {"caveat", rep.caveat},
           {"residues", residues},
           {"oscillates", rep.oscillates}};
  const bool failed = rep.limitMatchesTarget && !*rep.limitMatchesTarget;
  return {failed ? kCheckFailed : kOk, out.dump(2)};
}

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::RankDeficient:
    case ErrorKind::NotAcyclic:
      return kInvalidInput;
    case ErrorKind::DegenerateMap:
    case ErrorKind::EmptyInterior:
      return kDegenerate;
    case ErrorKind::SizeLimit:
      return kSizeLimit;
  }
  return kInvalidInput;
}

Outcome errorOutcome(int code, std::string_view kind, const std::string& detail, const std::vector<std::int64_t>& witness) {
  Json w = Json::array();
  for (auto x : witness) w.push_back(x);
  Json out{{"error", Json{{"kind", kind}, {"detail", detail}, {"witness", w}}}};
  return {code, out.dump(2)};
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string render(const std::string& document, Format format) {
  if (format == Format::Json) return document + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(Json::parse(document), "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return out.str();
}

}  // namespace

Outcome run(const JobSpec& spec) {
  Outcome res;
  try {
    if (spec.command == "analyze") {
      res = analyze(spec);
    } else if (spec.command == "kpoly") {
      res = kpoly(spec);
    } else if (spec.command == "phi") {
      res = phiCommand(spec);
    } else if (spec.command == "expand") {
      res = expand(spec);
    } else if (spec.command == "concavity") {
      res = concavity(spec);
    } else if (spec.command == "carries") {
      res = carries(spec);
    } else if (spec.command == "asymptotic") {
      res = asymptotic(spec);
    } else if (spec.command == "convergence") {
      res = convergence(spec);
    } else {
      bad("unknown command " + spec.command);
    }
  } catch (const Error& e) {
    res = errorOutcome(exitCodeFor(e.kind()), kindName(e.kind()), e.what(), e.witness());
  } catch (const Json::exception& e) {
    res = errorOutcome(kInvalidInput, kindName(ErrorKind::InvalidInput), e.what(), {});
  }
  res.output = render(res.output, spec.format);
  return res;
}

}  // namespace asymk::cli
