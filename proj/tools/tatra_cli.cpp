#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tatra/autiso.hpp"
#include "tatra/coherent.hpp"
#include "tatra/scheme.hpp"
#include "tatra/separability.hpp"
#include "tatra/wl.hpp"

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitIo = 3;

struct Options {
  bool all_alpha = false;
  int max_degree = 300;
  std::string format = "json";
};

void check_degree(int q, int n, const Options& opt) {
  long long deg = (long long)n * (q + 1);
  if (deg > opt.max_degree)
    throw std::invalid_argument("degree " + std::to_string(deg) + " exceeds --max-degree " +
                                std::to_string(opt.max_degree));
}

int cmd_build(int q, int n, const std::string& out, const Options& opt) {
  check_degree(q, n, opt);
  tatra::TatraScheme x = tatra::build_tatra(q, n);
  std::ofstream mf(out);
  if (!mf) {
    std::cerr << "cannot open " << out << "\n";
    return kExitIo;
  }
  tatra::write_matrix(mf, x.config);
  std::string labels_path = out + ".labels.json";
  std::ofstream lf(labels_path);
  if (!lf) {
    std::cerr << "cannot open " << labels_path << "\n";
    return kExitIo;
  }
  lf << tatra::labels_json(x) << "\n";
  if (!mf.good() || !lf.good()) return kExitIo;
  std::cout << "wrote " << out << " (" << x.degree() << "x" << x.degree() << ", rank "
            << x.rank() << ") and " << labels_path << "\n";
  return 0;
}

int cmd_verify(int q, int n, const Options& opt) {
  check_degree(q, n, opt);
  tatra::TatraScheme x = tatra::build_tatra(q, n);
  tatra::StructureReport rep = tatra::verify_structure(x);
  for (const auto& c : rep.checks) {
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.ok) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
    if (!c.ok) return kExitAssertion;
  }
  bool schurian = tatra::schurity_check(x);
  std::cout << (schurian ? "ok   " : "FAIL ") << "schurity (orbits on pairs = colors)\n";
  if (!schurian) return kExitAssertion;
  // the closed-form relation images must match the permutation action
  tatra::relation_image(tatra::SemilinearMap{{1, 1, 0, 1}, 0}, x);
  tatra::relation_image(tatra::SemilinearMap::diag(x.field.primitive_element(), 1), x);
  if (x.field.degree() > 1) tatra::relation_image(tatra::SemilinearMap::diag(1, 1, 1), x);
  std::cout << "ok   relation images match Lemma formulas\n";
  return 0;
}

int cmd_tensor(int q, int n, const std::string& out, const Options& opt) {
  check_degree(q, n, opt);
  tatra::TatraScheme x = tatra::build_tatra(q, n);
  tatra::IntersectionTensor t = tatra::intersection_tensor(x.config);
  nlohmann::ordered_json j;
  j["rank"] = t.rank;
  auto entries = nlohmann::ordered_json::array();
  for (int r = 0; r < t.rank; ++r) {
    auto plane = nlohmann::ordered_json::array();
    for (int s = 0; s < t.rank; ++s) {
      auto row = nlohmann::ordered_json::array();
      for (int u = 0; u < t.rank; ++u) row.push_back(t.at(r, s, u));
      plane.push_back(row);
    }
    entries.push_back(plane);
  }
  j["entries"] = entries;
  std::ostream* os = &std::cout;
  std::ofstream of;
  if (!out.empty()) {
    of.open(out);
    if (!of) {
      std::cerr << "cannot open " << out << "\n";
      return kExitIo;
    }
    os = &of;
  }
  *os << j.dump(2) << "\n";
  return os->good() ? 0 : kExitIo;
}

int cmd_groups(int q, int n, const Options& opt) {
  check_degree(q, n, opt);
  tatra::TatraScheme x = tatra::build_tatra(q, n);
  nlohmann::ordered_json j;
  j["q"] = q;
  j["n"] = n;
  j["aut_order"] = tatra::automorphism_group(x).order();
  j["iso_order"] = tatra::isomorphism_group(x).order();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_report(int q, int n, const Options& opt, std::string* out_json = nullptr) {
  check_degree(q, n, opt);
  tatra::SeparabilityReport rep =
      tatra::separability_verdict(q, n, opt.all_alpha ? opt.max_degree : 100);
  std::string json = tatra::separability_report_json(rep);
  if (out_json) {
    *out_json = json;
    return 0;
  }
  if (opt.format == "text") {
    std::cout << "X(" << q << "," << n << "): s <= " << rep.s_upper_bound
              << ", s >= " << rep.s_lower_bound
              << (rep.noninduced_witness
                      ? " (non-induced witness u=" + std::to_string(rep.noninduced_witness->u) + ")"
                      : "")
              << "\n";
  } else {
    std::cout << json << "\n";
  }
  return 0;
}

int cmd_batch(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitIo;
  }
  auto results = nlohmann::ordered_json::array();
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int q, n;
    if (!(ls >> q >> n)) continue;
    nlohmann::ordered_json entry;
    entry["q"] = q;
    entry["n"] = n;
    try {
      std::string json;
      cmd_report(q, n, opt, &json);
      entry["status"] = "ok";
      entry["report"] = nlohmann::ordered_json::parse(json);
    } catch (const std::exception& e) {
      entry["status"] = "error";
      entry["message"] = e.what();
    }
    results.push_back(entry);
  }
  std::cout << results.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tatra scheme construction, verification, and separability reports"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--all-alpha", opt.all_alpha, "run per-base-point checks for every alpha regardless of degree");
  app.add_option("--max-degree", opt.max_degree, "refuse instances of larger degree (default 300)");
  app.add_option("--format", opt.format, "output format: json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));

  int q = 0, n = 0;
  std::string out_path, batch_path;

  auto* build = app.add_subcommand("build", "write the color matrix and label map");
  build->add_option("q", q)->required();
  build->add_option("n", n)->required();
  build->add_option("out", out_path, "output path (default tatra_q_n.matrix)");

  auto* verify = app.add_subcommand("verify", "check the structure constants and schurity");
  verify->add_option("q", q)->required();
  verify->add_option("n", n)->required();

  auto* tensor = app.add_subcommand("tensor", "export the intersection tensor as JSON");
  tensor->add_option("q", q)->required();
  tensor->add_option("n", n)->required();
  tensor->add_option("out", out_path, "output path (default stdout)");

  auto* groups = app.add_subcommand("groups", "automorphism and isomorphism group orders");
  groups->add_option("q", q)->required();
  groups->add_option("n", n)->required();

  auto* report = app.add_subcommand("report", "separability report as JSON");
  report->add_option("q", q)->required();
  report->add_option("n", n)->required();

  auto* batch = app.add_subcommand("batch", "run report over a file of 'q n' lines");
  batch->add_option("file", batch_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      if (out_path.empty())
        out_path = "tatra_" + std::to_string(q) + "_" + std::to_string(n) + ".matrix";
      return cmd_build(q, n, out_path, opt);
    }
    if (verify->parsed()) return cmd_verify(q, n, opt);
    if (tensor->parsed()) return cmd_tensor(q, n, out_path, opt);
    if (groups->parsed()) return cmd_groups(q, n, opt);
    if (report->parsed()) return cmd_report(q, n, opt);
    if (batch->parsed()) return cmd_batch(batch_path, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const std::logic_error& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
  return 0;
}
