#include "rootbounds/json_io.hpp"

namespace rootbounds::io {

json to_json(const Polynomial& p) { return json{{"coeffs", p.coeffs()}}; }

Polynomial polynomial_from_json(const json& j) {
  if (j.contains("coeffs") && j.contains("full")) {
    throw Error("polynomial JSON must carry exactly one of coeffs/full");
  }
  if (j.contains("coeffs")) return Polynomial(j.at("coeffs").get<std::vector<double>>());
  if (j.contains("full")) return make_monic(j.at("full").get<std::vector<double>>());
  throw Error("polynomial JSON needs a coeffs or full array");
}

json to_json(const ShapeSpec& s) { return json{{"n", s.n}, {"m", s.m}, {"pos", s.pos}}; }

ShapeSpec shape_from_json(const json& j) {
  ShapeSpec s;
  s.n = j.at("n").get<int>();
  s.m = j.at("m").get<int>();
  s.pos = j.at("pos").get<std::vector<int>>();
  if (!shape_valid(s)) throw ShapeMismatch("shape JSON violates the cell constraints");
  return s;
}

const char* kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Frobenius: return "frobenius";
    case MatrixKind::Fiedler: return "fiedler";
    case MatrixKind::Sparse: return "sparse";
    case MatrixKind::W: return "w";
    case MatrixKind::X: return "x";
    case MatrixKind::InverseSparse: return "inverse_sparse";
    case MatrixKind::Extended: return "extended";
  }
  return "sparse";
}

namespace {

MatrixKind kind_from_name(const std::string& name) {
  if (name == "frobenius") return MatrixKind::Frobenius;
  if (name == "fiedler") return MatrixKind::Fiedler;
  if (name == "sparse") return MatrixKind::Sparse;
  if (name == "w") return MatrixKind::W;
  if (name == "x") return MatrixKind::X;
  if (name == "inverse_sparse") return MatrixKind::InverseSparse;
  if (name == "extended") return MatrixKind::Extended;
  throw Error("unknown matrix kind: " + name);
}

}  // namespace

json to_json(const CompanionMatrix& C) {
  const int n = C.order();
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries.push_back(C.entries(i, j));
  }
  json out{{"kind", kind_name(C.kind)},
           {"order", n},
           {"source_degree", C.source_degree},
           {"entries", entries}};
  if (C.shape) out["shape"] = to_json(*C.shape);
  return out;
}

CompanionMatrix matrix_from_json(const json& j) {
  CompanionMatrix C;
  const int n = j.at("order").get<int>();
  const auto entries = j.at("entries").get<std::vector<double>>();
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ShapeMismatch("matrix JSON entry count does not match the order");
  }
  C.entries.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      C.entries(i, k) = entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(k)];
    }
  }
  C.kind = kind_from_name(j.at("kind").get<std::string>());
  C.source_degree = j.value("source_degree", n);
  if (j.contains("shape")) C.shape = shape_from_json(j.at("shape"));
  return C;
}

json to_json(const PartitionSpec& spec) {
  return json{{"parts", spec.parts}, {"p1_index", spec.p1_index}};
}

PartitionSpec partition_from_json(const json& j) {
  PartitionSpec spec;
  spec.parts = j.at("parts").get<std::vector<std::vector<int>>>();
  spec.p1_index = j.at("p1_index").get<int>();
  return spec;
}

json to_json(const BoundReport& r) {
  json families = json::array();
  auto family = [&](const std::string& name, double value, json params = json::object()) {
    families.push_back(json{{"family", name}, {"value", value}, {"params", params}});
  };
  if (!r.all_roots_zero) {
    family("cauchy", r.cauchy);
    if (r.frobenius) family("frobenius", *r.frobenius);
    if (r.best_fiedler) {
      family("fiedler", r.best_fiedler->first, json{{"b", r.best_fiedler->second}});
    }
    if (r.partition) {
      family("partition", r.partition->first,
             json{{"partition", to_json(r.partition->second)}});
    }
    if (r.best_sparse) {
      family("sparse", r.best_sparse->first, json{{"shape", to_json(r.best_sparse->second)}});
    }
    if (r.w) family("w", *r.w);
    if (!r.x.empty()) {
      json all = json::array();
      double best = r.x.front().second;
      int best_b = r.x.front().first;
      for (const auto& [b, v] : r.x) {
        all.push_back(json::array({b, v}));
        if (v < best) {
          best = v;
          best_b = b;
        }
      }
      family("x", best, json{{"b", best_b}, {"all", all}});
    }
    if (r.lower_reversal) family("lower_reversal", *r.lower_reversal);
    if (r.lower_inverse) family("lower_inverse", *r.lower_inverse);
  }
  json out{{"degree", r.degree},
           {"effective_degree", r.effective_degree},
           {"zero_root_multiplicity", r.zero_root_multiplicity},
           {"all_roots_zero", r.all_roots_zero},
           {"families", families},
           {"best_upper", json{{"value", r.best_upper}, {"source", r.best_upper_source}}}};
  if (r.best_lower) {
    out["best_lower"] = json{{"value", *r.best_lower}, {"source", r.best_lower_source}};
  }
  return out;
}

BoundReport report_from_json(const json& j) {
  BoundReport r;
  r.degree = j.at("degree").get<int>();
  r.effective_degree = j.at("effective_degree").get<int>();
  r.zero_root_multiplicity = j.at("zero_root_multiplicity").get<int>();
  r.all_roots_zero = j.at("all_roots_zero").get<bool>();
  for (const auto& fam : j.at("families")) {
    const std::string name = fam.at("family").get<std::string>();
    const double value = fam.at("value").get<double>();
    const json& params = fam.at("params");
    if (name == "cauchy") {
      r.cauchy = value;
    } else if (name == "frobenius") {
      r.frobenius = value;
    } else if (name == "fiedler") {
      r.best_fiedler = std::make_pair(value, params.at("b").get<int>());
    } else if (name == "partition") {
      r.partition = std::make_pair(value, partition_from_json(params.at("partition")));
    } else if (name == "sparse") {
      r.best_sparse = std::make_pair(value, shape_from_json(params.at("shape")));
    } else if (name == "w") {
      r.w = value;
    } else if (name == "x") {
      for (const auto& pair : params.at("all")) {
        r.x.emplace_back(pair.at(0).get<int>(), pair.at(1).get<double>());
      }
    } else if (name == "lower_reversal") {
      r.lower_reversal = value;
    } else if (name == "lower_inverse") {
      r.lower_inverse = value;
    } else {
      throw Error("unknown bound family: " + name);
    }
  }
  r.best_upper = j.at("best_upper").at("value").get<double>();
  r.best_upper_source = j.at("best_upper").at("source").get<std::string>();
  if (j.contains("best_lower")) {
    r.best_lower = j.at("best_lower").at("value").get<double>();
    r.best_lower_source = j.at("best_lower").at("source").get<std::string>();
  }
  return r;
}

json to_json(const oracle::RootSet& roots) {
  json rr = json::array();
  for (const auto& z : roots.roots) rr.push_back(json::array({z.real(), z.imag()}));
  return json{{"roots", rr}, {"residuals", roots.residuals}, {"converged", roots.converged}};
}

json to_json(const theorems::PropertyResult& result) {
  json violations = json::array();
  for (const auto& v : result.violations) {
    violations.push_back(
        json{{"coeffs", v.coeffs}, {"context", v.context}, {"observed", v.observed}});
  }
  return json{{"theorem", result.theorem_id},
              {"trials", result.trials},
              {"pass", result.pass()},
              {"vacuous", result.vacuous()},
              {"near_boundary", result.near_boundary},
              {"violations", violations}};
}

}  // namespace rootbounds::io
