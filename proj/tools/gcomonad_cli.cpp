#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gcomonad/coalgebra.hpp"
#include "gcomonad/equiv.hpp"
#include "gcomonad/json_io.hpp"
#include "gcomonad/lawcheck.hpp"
#include "gcomonad/modal.hpp"
#include "gcomonad/params.hpp"

using namespace gcomonad;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

ComonadKind comonad_arg(const std::string& s) {
  auto c = parse_comonad(s);
  if (!c) throw UsageError("unknown comonad " + s);
  return *c;
}

int cmd_check(const std::string& game, int tier, int k, const std::string& a_path, const std::string& b_path,
              const std::string& cert_path) {
  const ComonadKind c = comonad_arg(game);
  const LoadedStructure a = load_structure(a_path);
  const LoadedStructure b = load_structure(b_path);
  const Verdict v = decide_equivalence(c, tier, a, b, k);
  json out = v.to_json();
  out.erase("certificate");
  out["has_certificate"] = !v.certificate.is_null();
  if (!cert_path.empty() && !v.certificate.is_null()) {
    write_json(cert_path, v.certificate);
    out["certificate_file"] = cert_path;
  }
  std::cout << out.dump() << '\n';
  return v.equiv ? kYes : kNo;
}

int cmd_param(const std::string& kind, const std::string& a_path, const std::string& witness_path) {
  const LoadedStructure a = load_structure(a_path);
  json out = {{"kind", kind}};
  json witness;
  if (kind == "tree-depth") {
    const auto r = tree_depth(a.structure);
    if (auto err = verify_forest_cover(gaifman_graph(a.structure), r.witness))
      throw std::logic_error("tree-depth witness rejected: " + *err);
    out["value"] = r.depth;
    witness = forest_cover_to_json(a.structure, r.witness);
  } else if (kind == "tree-width") {
    const auto r = tree_width(a.structure);
    if (auto err = verify_tree_decomposition(gaifman_graph(a.structure), r.witness))
      throw std::logic_error("tree-width witness rejected: " + *err);
    out["value"] = r.width;
    witness = decomposition_to_json(a.structure, r.witness);
  } else if (kind == "modal-depth") {
    const PointedStructure p = a.pointed();
    KripkeView check(p.base);
    const auto h = modal_depth(p);
    if (!h) {
      out["value"] = nullptr;
      out["reason"] = "the generated submodel is not a synchronization tree";
      std::cout << out.dump() << '\n';
      return kNo;
    }
    const int k = std::max(1, *h);
    const auto alpha = modal_coalgebra(p, k);
    if (auto err = verify_modal_coalgebra(p, k, *alpha)) throw std::logic_error("modal witness rejected: " + *err);
    out["value"] = *h;
    witness = modal_coalgebra_to_json(p.base, k, *alpha);
  } else {
    throw UsageError("unknown parameter kind " + kind);
  }
  if (!witness_path.empty()) {
    write_json(witness_path, witness);
    out["witness_file"] = witness_path;
  }
  std::cout << out.dump() << '\n';
  return kYes;
}

int construct_coalgebra(ComonadKind c, int k, const LoadedStructure& a) {
  const Structure& s = a.structure;
  json alpha;
  std::string none;
  if (c == ComonadKind::ef) {
    const auto td = tree_depth(s);
    if (td.depth <= k) {
      const auto co = forest_cover_to_ef_coalgebra(td.witness, k);
      if (auto err = verify_ef_coalgebra(s, k, co)) throw std::logic_error("constructed coalgebra rejected: " + *err);
      alpha = ef_coalgebra_to_json(s, k, co);
    } else {
      none = "tree-depth is " + std::to_string(td.depth);
    }
  } else if (c == ComonadKind::pebble) {
    const auto pn = pebble_coalgebra_number(s);
    if (pn.k <= k) {
      const auto co = pebble_cover_to_coalgebra(pn.witness);
      if (auto err = verify_pebble_coalgebra(s, k, co)) throw std::logic_error("constructed coalgebra rejected: " + *err);
      alpha = pebble_coalgebra_to_json(s, k, co);
    } else {
      none = "tree-width is " + std::to_string(pn.k - 1);
    }
  } else {
    const PointedStructure p = a.pointed();
    KripkeView check(p.base);
    if (auto co = modal_coalgebra(p, k)) {
      if (auto err = verify_modal_coalgebra(p, k, *co)) throw std::logic_error("constructed coalgebra rejected: " + *err);
      alpha = modal_coalgebra_to_json(s, k, *co);
    } else {
      const auto h = modal_depth(p);
      none = h ? "modal depth is " + std::to_string(*h) : "not a synchronization tree";
    }
  }
  if (alpha.is_null()) {
    std::cout << "none (" << none << ")\n";
    return kNo;
  }
  std::cout << alpha.dump() << '\n';
  return kYes;
}

int verify_coalgebra(ComonadKind c, int k, const LoadedStructure& a, const std::string& alpha_path) {
  const json j = parse_json_strict(read_file(alpha_path));
  if (j.is_object() && j.contains("comonad") && j["comonad"] != comonad_name(c))
    throw UsageError("coalgebra file is for comonad " + j["comonad"].dump());
  std::optional<std::string> err;
  if (c == ComonadKind::ef) {
    err = verify_ef_coalgebra(a.structure, k, ef_coalgebra_from_json(a.structure, j));
  } else if (c == ComonadKind::pebble) {
    err = verify_pebble_coalgebra(a.structure, k, pebble_coalgebra_from_json(a.structure, j));
  } else {
    const PointedStructure p = a.pointed();
    KripkeView check(p.base);
    err = verify_modal_coalgebra(p, k, modal_coalgebra_from_json(p.base, j));
  }
  if (err) {
    std::cout << "invalid: " << *err << '\n';
    return kNo;
  }
  std::cout << "valid\n";
  return kYes;
}

int cmd_coalgebra(const std::string& comonad, int k, const std::string& a_path, const std::string& alpha_path) {
  const ComonadKind c = comonad_arg(comonad);
  if (k < 1) throw UsageError("k must be >= 1");
  const LoadedStructure a = load_structure(a_path);
  return alpha_path.empty() ? construct_coalgebra(c, k, a) : verify_coalgebra(c, k, a, alpha_path);
}

int cmd_selftest(std::uint64_t seed, std::size_t iters, bool as_json) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.iterations = iters;
  const LawReport r = run_law_suite(cfg);
  if (as_json)
    std::cout << r.summary().dump() << '\n';
  else
    std::cout << r.text();
  return r.passed() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game comonads: equivalence games, coalgebras and structural parameters"};
  app.require_subcommand(1);

  std::string game, a_path, b_path, cert_path, kind, witness_path, comonad, alpha_path;
  int tier = 1, k = 1;
  std::uint64_t seed = 0;
  std::size_t iters = 200;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Decide an equivalence tier between two structures");
  check->add_option("--game", game, "ef | pebble | modal")->required()->check(CLI::IsMember({"ef", "pebble", "modal"}));
  check->add_option("--tier", tier, "1 | 2 | 3")->required()->check(CLI::Range(1, 3));
  check->add_option("-k", k, "resource index")->required();
  check->add_option("A", a_path)->required();
  check->add_option("B", b_path)->required();
  check->add_option("--cert", cert_path, "write the certificate here when one exists");

  auto* param = app.add_subcommand("param", "Compute a structural parameter and its witness");
  param->add_option("--kind", kind, "tree-depth | tree-width | modal-depth")
      ->required()
      ->check(CLI::IsMember({"tree-depth", "tree-width", "modal-depth"}));
  param->add_option("A", a_path)->required();
  param->add_option("--witness", witness_path, "write the witness here");

  auto* coalg = app.add_subcommand("coalgebra", "Construct or verify a coalgebra");
  coalg->add_option("--comonad", comonad, "ef | pebble | modal")
      ->required()
      ->check(CLI::IsMember({"ef", "pebble", "modal"}));
  coalg->add_option("-k", k, "resource index")->required();
  coalg->add_option("A", a_path)->required();
  coalg->add_option("alpha", alpha_path, "coalgebra to verify");

  auto* selftest = app.add_subcommand("selftest", "Run the randomized law suite");
  selftest->add_option("--seed", seed);
  selftest->add_option("--iters", iters);
  selftest->add_flag("--json", as_json, "print the JSON summary instead of the text report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(game, tier, k, a_path, b_path, cert_path);
    if (*param) return cmd_param(kind, a_path, witness_path);
    if (*coalg) return cmd_coalgebra(comonad, k, a_path, alpha_path);
    if (*selftest) return cmd_selftest(seed, iters, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
