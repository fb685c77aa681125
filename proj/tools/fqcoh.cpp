#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqcoh/cohomology.hpp"
#include "fqcoh/verify.hpp"

using namespace fqcoh;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPropFail = 2, kMismatch = 3, kResource = 4 };

struct QuandleArgs {
  std::string field = "2^2/1,1,1";
  std::string omega = "g^1";
  std::string beta = "g^2";

  void add(CLI::App* cmd) {
    cmd->add_option("--field", field, "field as p^m/c_m,...,c_0");
    cmd->add_option("--omega", omega, "omega in element syntax");
    cmd->add_option("--beta", beta, "beta in element syntax");
  }
  AlexanderFQuandle build() const {
    const FieldSpec F = FieldSpec::parse(field);
    return AlexanderFQuandle(F, parse_element(F, omega), parse_element(F, beta));
  }
};

std::vector<unsigned> parse_list(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(static_cast<unsigned>(std::stoul(tok)));
  return out;
}

int exit_for(Status s) {
  switch (s) {
    case Status::fail: return kPropFail;
    case Status::mismatch: return kMismatch;
    default: return kOk;
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of Alexander f-quandles over finite fields"};
  app.require_subcommand(1);

  std::string field_text = "2^2/1,1,1";
  auto* info = app.add_subcommand("field-info", "describe a finite field");
  info->add_option("--field", field_text, "field as p^m/c_m,...,c_0");

  QuandleArgs axioms_q;
  auto* axioms = app.add_subcommand("check-axioms", "exhaustively check the f-quandle axioms");
  axioms_q.add(axioms);

  QuandleArgs delta_q;
  unsigned delta_n = 1;
  std::string cochain_text;
  auto* delta = app.add_subcommand("delta", "apply the coboundary to a cochain");
  delta_q.add(delta);
  delta->add_option("--n", delta_n, "arity of the cochain")->required();
  delta->add_option("--cochain", cochain_text, "cochain text, e.g. 1*U1^1*U2^2")->required();

  QuandleArgs hdim_q;
  unsigned hdim_n = 2;
  bool allow_big = false;
  auto* hdim = app.add_subcommand("hdim", "dimensions of Z^n, B^n and H^n with representatives");
  hdim_q.add(hdim);
  hdim->add_option("--n", hdim_n, "degree")->required();
  hdim->add_flag("--allow-big", allow_big, "lift the 4 GiB memory ceiling");

  QuandleArgs prop_q;
  std::string prop_id;
  auto* prop = app.add_subcommand("verify-prop", "check every instance of a cocycle family");
  prop_q.add(prop);
  prop->add_option("--prop", prop_id, "family id (M2, F, F0, E0, E1, PSI, GAMMA:I..V, A..E, P5M1, ...)")
      ->required();

  QuandleArgs basis_q;
  unsigned basis_n = 2;
  bool candidates_only = false, basis_big = false;
  auto* basis = app.add_subcommand("verify-basis", "compare a candidate basis with the computed H^n");
  basis_q.add(basis);
  basis->add_option("--n", basis_n, "degree (2, 3 or 4)")->required();
  basis->add_flag("--candidates-only", candidates_only, "skip the dim H comparison");
  basis->add_flag("--allow-big", basis_big, "lift the 4 GiB memory ceiling");

  std::string sweep_field, sweep_ns = "2,3", sweep_json;
  bool sweep_big = false, sweep_large = false, sweep_cands = false;
  unsigned workers = 0;
  auto* sw = app.add_subcommand("sweep", "basis comparison over every admissible (omega, beta)");
  sw->add_option("--field", sweep_field, "field as p^m/c_m,...,c_0")->required();
  sw->add_option("--n", sweep_ns, "comma-separated degrees");
  sw->add_option("--json", sweep_json, "write the full report to this file");
  sw->add_option("--workers", workers, "worker threads (0 = all cores)");
  sw->add_flag("--candidates-only", sweep_cands, "skip the dim H comparison");
  sw->add_flag("--allow-big", sweep_big, "lift the 4 GiB memory ceiling");
  sw->add_flag("--allow-large-field", sweep_large, "allow q > 16");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*info) {
      const FieldSpec F = FieldSpec::parse(field_text);
      json j;
      j["field"] = F.to_string();
      j["p"] = F.p();
      j["m"] = F.m();
      j["q"] = F.q();
      j["modulus"] = F.modulus();
      j["primitive"] = format_element(F, F.primitive());
      auto elems = json::array();
      for (unsigned c = 0; c < F.q(); ++c) elems.push_back(format_element(F, static_cast<Code>(c)));
      j["elements"] = elems;
      emit(j);
      return kOk;
    }
    if (*axioms) {
      const auto r = verify_axioms(axioms_q.build());
      emit(r.to_json());
      return r.status == Status::pass ? kOk : kPropFail;
    }
    if (*delta) {
      const auto Q = delta_q.build();
      const UCochain phi = parse_cochain(Q.field(), delta_n, cochain_text);
      const UCochain d = delta_poly(Q, phi);
      json j;
      j["cochain"] = to_text(phi);
      j["quandle_cochain"] = is_quandle_cochain(phi);
      j["delta"] = to_text(d);
      j["delta_json"] = to_json(d);
      j["cocycle"] = d.is_zero();
      emit(j);
      return kOk;
    }
    if (*hdim) {
      HDimOptions opt;
      opt.allow_big = allow_big;
      const auto r = h_dim(hdim_q.build(), hdim_n, opt);
      emit(r.to_json());
      return kOk;
    }
    if (*prop) {
      const auto r = verify_proposition(prop_q.build(), prop_id);
      emit(r.to_json());
      return exit_for(r.status);
    }
    if (*basis) {
      const auto r = verify_basis_theorem(basis_q.build(), basis_n, {candidates_only, basis_big});
      emit(r.to_json());
      return exit_for(r.status);
    }
    if (*sw) {
      SweepOptions opt;
      opt.candidates_only = sweep_cands;
      opt.allow_big = sweep_big;
      opt.allow_large_field = sweep_large;
      opt.workers = workers;
      const auto res = sweep(FieldSpec::parse(sweep_field), parse_list(sweep_ns), opt);
      const json full = res.to_json();
      if (!sweep_json.empty()) {
        std::ofstream out(sweep_json);
        out << full.dump(2) << '\n';
      }
      std::cout << "omega\tbeta\tn\tstatus\tcandidates\tdimH\n";
      for (const auto& r : res.reports) {
        const auto& d = r.details;
        std::cout << r.omega << '\t' << r.beta << '\t' << r.parameters["n"].get<unsigned>() << '\t'
                  << status_name(r.status) << '\t' << d["candidate_count"].get<std::size_t>() << '\t'
                  << (d.contains("dimH") ? std::to_string(d["dimH"].get<std::size_t>()) : "-") << '\n';
      }
      emit(full["summary"]);
      if (res.fail) return kPropFail;
      if (res.mismatch) return kMismatch;
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::ResourceLimit ? kResource : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
