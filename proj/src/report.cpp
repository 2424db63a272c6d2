#include "gmbqc/report.hpp"

#include <chrono>
#include <sstream>

#include "gmbqc/errors.hpp"
#include "gmbqc/ext.hpp"
#include "gmbqc/hvm.hpp"
#include "gmbqc/quasi.hpp"

namespace gmbqc {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> bit_strings(const std::vector<BitVector>& vecs) {
  std::vector<std::string> out;
  for (const auto& v : vecs) out.push_back(v.to_string());
  return out;
}

ordered_json phase_summary(const PhaseFunction& phi) {
  ordered_json j = ordered_json::array();
  for (const auto& v : phi.values) j.push_back(v.to_string());
  return j;
}

}  // namespace

ordered_json analyze(const InstanceSpec& spec, const ReportOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  const Fixture& fx = spec.fixture;
  ordered_json j;
  j["fixture"] = fx.name;
  j["n_qubits"] = fx.set.n_qubits();
  j["observable_count"] = fx.set.size();
  std::vector<std::string> obs;
  for (const auto& p : fx.set.observables) obs.push_back(p.to_string());
  j["observables"] = obs;
  j["measurable"] = fx.set.measurable;
  j["outputs"] = fx.set.outputs;

  auto cs = build_constraints(fx.set);
  j["constraints"] = {{"rows", cs.triples.size()},
                      {"intermediates", cs.intermediates.size()}};
  auto V = compute_V(fx.set, cs);
  j["module_v"] = {{"dim", V.dim()},
                   {"separating", check_separation(fx.set, V)},
                   {"basis", bit_strings(V.basis)}};

  auto ag = spec.input_group();
  j["group"] = {{"order", ag.group.order()},
                {"generator_count", ag.group.generators.size()},
                {"lemma4_obstruction", check_lemma4(fx.set, ag)}};

  std::optional<std::vector<double>> xi;
  if (fx.state) {
    xi = characteristic(*fx.state, fx.set);
    j["characteristic"] = *xi;
  }

  std::optional<MBQCInstance> instance;
  if (fx.b_e && fx.state && !fx.reference_context.empty())
    instance = make_mbqc_instance(fx.set, ag, fx.reference_context, *fx.b_e,
                                  *fx.state);

  std::optional<PhaseFunction> sym_phi;
  if (xi) {
    try {
      auto family = symmetry_solutions(fx.set, ag, V, *xi);
      sym_phi = family.particular;
      j["symmetry"] = {
          {"family", "nonempty"},
          {"particular", phase_summary(family.particular)},
          {"particular_exact", coboundary(family.particular, ag).exact}};
    } catch (const InvariantError& e) {
      j["symmetry"] = {{"family", "empty"}, {"error", e.what()}};
    }
  }

  std::vector<uint8_t> o;
  if (instance) {
    ordered_json ideal = ordered_json::array();
    std::vector<uint8_t> ideal_bits;
    for (std::size_t g = 0; g < ag.group.order(); ++g) {
      auto io = ideal_output(*instance, g);
      ideal_bits.push_back(io.bit);
      ideal.push_back({{"bit", io.bit},
                       {"success_prob", io.success_prob},
                       {"degenerate", io.degenerate}});
    }
    o = fx.target_outputs.empty() ? ideal_bits : fx.target_outputs;
    j["output_function"] = {{"o", o},
                            {"ideal", ideal},
                            {"witness", witness(*instance, o)},
                            {"witness_quantum_max", ag.group.order()}};
    if (opts.sample_shots > 0) {
      std::size_t failures = 0;
      for (std::size_t g = 0; g < ag.group.order(); ++g)
        for (std::size_t t = 0; t < opts.sample_shots; ++t)
          if (run(*instance, g, opts.seed + g * opts.sample_shots + t)
                  .output != o[g])
            ++failures;
      j["sampling"] = {{"shots_per_input", opts.sample_shots},
                       {"failures", failures}};
    }

    auto verdict = certify_contextuality(fx.set, ag, V, o, *fx.b_e, o[0]);
    if (verdict.contextual) {
      j["prop1"] = {{"verdict", "ContextualByProp1"},
                    {"infeasibility_rows", verdict.infeasibility_rows}};
    } else {
      j["prop1"] = {{"verdict", "InconclusiveWithExactWitness"},
                    {"witness_phi", phase_summary(*verdict.witness)}};
    }

    auto space = enumerate_assignments(cs);
    if (space.empty()) {
      j["hvm"] = {{"assignment_space", "empty"}};
    } else {
      auto d = delta(space, ag, o, *fx.b_e);
      auto red = classical_reduction(o, ValueAssignment{d.argmin}, ag,
                                     *fx.b_e);
      j["hvm"] = {{"assignment_space_dim", space.dim()},
                  {"delta", d.delta},
                  {"classical_witness_max", d.classical_max},
                  {"argmin", d.argmin.to_string()},
                  {"g_tilde", red.g_tilde},
                  {"lemma1", check_lemma1(space, ag, V)}};
      if (!verdict.contextual) {
        // Prop.-2 trace of the exact witness along every group word.
        ordered_json cc = ordered_json::array();
        for (std::size_t g = 0; g < ag.group.order(); ++g) {
          auto r = cc_coprocessor(fx.set, ag, *verdict.witness,
                                  ag.group.words[g], *fx.b_e);
          cc.push_back({{"output", r.output},
                        {"memory_cells", r.memory_cells},
                        {"memory_bound", r.memory_bound}});
        }
        j["cc_coprocessor"] = cc;
      }
    }
  }

  // State-independent proof engines.
  {
    ordered_json p;
    auto parity = find_parity_proof(cs);
    p["parity_certificate"] =
        parity ? ordered_json(parity->b.to_string()) : ordered_json(nullptr);
    auto sym = spec.symmetry_group();
    if (sym.group.order() > 1) {
      auto cert = find_symmetry_proof(cs, sym);
      if (cert) {
        p["symmetry_certificate"] = {{"h", cert->h},
                                     {"a", cert->a.to_string()}};
        p["related_parity"] = relate(*cert, cs, sym).b.to_string();
      } else {
        p["symmetry_certificate"] = nullptr;
      }
    }
    j["proofs"] = p;
  }

  if (xi) {
    try {
      auto q = quasiprob(*fx.state, fx.set, V);
      double qmin = q.values[0], qmax = q.values[0], qsum = 0.0;
      for (double x : q.values) {
        qmin = std::min(qmin, x);
        qmax = std::max(qmax, x);
        qsum += x;
      }
      ordered_json qq = {{"points", q.values.size()},
                         {"min", qmin},
                         {"max", qmax},
                         {"sum", qsum}};
      if (q.dim <= 8) qq["values"] = q.values;
      if (spec.raw_input_generators.empty()) {
        auto cov = check_covariance(fx.set, V, ag, fx.input_generators);
        qq["covariant"] = cov.verified;
      }
      j["quasiprobability"] = qq;
    } catch (const std::exception& e) {
      j["quasiprobability"] = {{"refused", e.what()}};
    }
  }

  {
    auto N = compute_N(fx.set, V, &ag);
    ordered_json e = {{"dim_n", N.dim()},
                      {"closed_under_action", N.closed_under_action}};
    try {
      auto M = module_from_N(N, ag);
      e["h2_dim"] = h2(ag.group, M).dim;
      if (sym_phi) {
        auto lam = lambda_from_phase(*sym_phi, ag, N);
        e["lambda_trivial"] = classify(lam, ag.group, M).is_zero();
      }
    } catch (const std::exception& ex) {
      e["refused"] = ex.what();
    }
    j["extension"] = e;
  }

  if (!opts.canonical) {
    auto dt = std::chrono::steady_clock::now() - t0;
    j["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }
  return j;
}

namespace {

void render(const ordered_json& j, const std::string& prefix,
            std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      render(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() &&
             !std::all_of(j.begin(), j.end(),
                          [](const ordered_json& x) { return x.is_primitive(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace gmbqc
