// higgscoh: exact Betti-number computations for rank-2 Higgs moduli spaces.
//
// Subcommands:
//   betti      ring-presentation and/or Morse-side Poincare series of H_n
//   strata     Harder-Narasimhan types, Shatz polygons, stratum codimensions
//   stabilize  coefficients of P_t(H_n) against the classifying-space limit
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "higgscoh/cache.hpp"
#include "higgscoh/morse.hpp"
#include "higgscoh/relation_ideal.hpp"
#include "higgscoh/series.hpp"
#include "higgscoh/series_json.hpp"
#include "higgscoh/shatz.hpp"

namespace {

constexpr const char* kCacheVersion = "1";

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int g = 1;
  int n = 0;
  long long d = 1;
  int r = 2;
  int maxdeg = -1;  // ring-side truncation override; -1 = exact polynomial
  long long max_top = -1;
  int maxn = 6;
  int through_degree = 6;
  std::string side = "both";
  std::string format = "table";
  std::string cache_dir;
  bool no_cache = false;
  bool verify_cache = false;
  bool verbose = false;
};

std::string default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::string(xdg) + "/higgscoh";
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/higgscoh";
  return {};
}

std::string render_series(const higgs::PoincareSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < s.coeffs().size(); ++d) {
    const auto& c = s.coeffs()[d];
    if (c == 0) continue;
    higgs::Int abs = c < 0 ? higgs::Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (abs != 1 || d == 0) out << abs.get_str();
    if (d >= 1) {
      if (abs != 1) out << " ";
      out << "t";
      if (d >= 2) out << "^" << d;
    }
  }
  if (first) out << "0";
  if (s.exact_through())
    out << " + O(t^" << *s.exact_through() + 1 << ")";
  return out.str();
}

// Computes the payload for the given key, consulting the cache when enabled.
nlohmann::json with_cache(const RunConfig& cfg, const higgs::cache::Key& key,
                          const std::function<nlohmann::json()>& compute) {
  const bool enabled = !cfg.no_cache && !cfg.cache_dir.empty();
  if (enabled) {
    if (auto hit = higgs::cache::get(cfg.cache_dir, key)) {
      if (cfg.verbose) std::cerr << "cache hit: " << key.filename() << "\n";
      if (cfg.verify_cache) {
        nlohmann::json fresh = compute();
        if (fresh.dump() != hit->dump())
          throw MismatchError("cache entry " + key.filename() +
                              " is not byte-identical to recomputation");
      }
      return *hit;
    }
  }
  nlohmann::json value = compute();
  if (enabled) higgs::cache::put(cfg.cache_dir, key, value);
  return value;
}

// ---------------------------------------------------------------- betti ----

nlohmann::json betti_payload(const RunConfig& cfg) {
  nlohmann::json out{{"command", "betti"}, {"g", cfg.g}, {"n", cfg.n},
                     {"d", cfg.d},         {"side", cfg.side}};
  const bool want_ring = cfg.side == "ring" || cfg.side == "both";
  const bool want_morse = cfg.side == "morse" || cfg.side == "both";
  if (want_ring) {
    higgs::PoincareSeries ring =
        (cfg.maxdeg >= 0 && cfg.side == "ring")
            ? higgs::morse::jacobian_poincare(cfg.g) *
                  higgs::ideal::dd_rhs_series(cfg.g, cfg.maxdeg)
            : higgs::ideal::full_h_series(cfg.g);
    out["ring"] = higgs::to_json(ring);
  }
  if (want_morse) {
    higgs::PoincareSeries morse =
        higgs::morse::higgs_poincare_morse({cfg.g, cfg.n, cfg.d});
    out["morse"] = higgs::to_json(morse);
  }
  if (cfg.side == "both")
    out["match"] = (out["ring"] == out["morse"]);
  return out;
}

int run_betti(const RunConfig& cfg) {
  if ((cfg.side == "ring" || cfg.side == "both") && cfg.n != 0)
    throw CLI::ValidationError(
        "betti",
        "--side " + cfg.side + " requires --n 0: the explicit ring presentation "
        "exists only for pole order n = 0 (use --side morse for n > 0)");

  higgs::cache::Key key{"betti",
                        {{"g", cfg.g},
                         {"n", cfg.n},
                         {"d", cfg.d},
                         {"side", cfg.side},
                         {"maxdeg", cfg.maxdeg}},
                        kCacheVersion};
  nlohmann::json payload = with_cache(cfg, key, [&] { return betti_payload(cfg); });

  if (cfg.format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "side,degree,coefficient\n";
    for (const char* side : {"ring", "morse"}) {
      if (!payload.contains(side)) continue;
      auto coeffs = payload[side]["coeffs"];
      for (std::size_t d = 0; d < coeffs.size(); ++d)
        std::cout << side << "," << d << "," << coeffs[d].get<std::string>()
                  << "\n";
    }
  } else {
    if (payload.contains("ring"))
      std::cout << "ring  : "
                << render_series(higgs::series_from_json(payload["ring"])) << "\n";
    if (payload.contains("morse"))
      std::cout << "morse : "
                << render_series(higgs::series_from_json(payload["morse"])) << "\n";
    if (payload.contains("match"))
      std::cout << "verdict: " << (payload["match"].get<bool>() ? "MATCH" : "MISMATCH")
                << "\n";
  }
  if (payload.contains("match") && !payload["match"].get<bool>())
    throw MismatchError("ring presentation and Morse assembly disagree");
  return 0;
}

// --------------------------------------------------------------- strata ----

nlohmann::json strata_payload(const RunConfig& cfg) {
  nlohmann::json types = nlohmann::json::array();
  for (const auto& mu : higgs::shatz::enum_hn_types(cfg.r, cfg.d, cfg.max_top)) {
    nlohmann::json row{{"parts", higgs::shatz::to_json(mu)},
                       {"polygon", higgs::shatz::to_json(higgs::shatz::polygon(mu))},
                       {"semistable", mu.is_semistable()}};
    if (!mu.is_semistable()) {
      auto codim = higgs::shatz::stratum_codim(mu, cfg.g, cfg.n);
      row["codim_chi_bound"] = codim.chi_bound;
      if (codim.exact)
        row["codim_exact"] = *codim.exact;
      else
        row["codim_exact"] = nullptr;
    }
    types.push_back(std::move(row));
  }
  return {{"command", "strata"}, {"g", cfg.g},       {"n", cfg.n},
          {"r", cfg.r},          {"d", cfg.d},       {"max_top_degree", cfg.max_top},
          {"types", std::move(types)}};
}

int run_strata(RunConfig& cfg) {
  if (cfg.d % 2 == 0) throw CLI::ValidationError("strata", "d must be odd");
  if (cfg.max_top < 0) cfg.max_top = (cfg.d + 1) / 2 + 3;

  higgs::cache::Key key{"strata",
                        {{"g", cfg.g},
                         {"n", cfg.n},
                         {"r", cfg.r},
                         {"d", cfg.d},
                         {"max", cfg.max_top}},
                        kCacheVersion};
  nlohmann::json payload = with_cache(cfg, key, [&] { return strata_payload(cfg); });

  if (cfg.format == "json") {
    std::cout << payload.dump(2) << "\n";
    return 0;
  }
  if (cfg.format == "csv") {
    std::cout << "kind,d1,d2,codim_chi_bound,codim_exact\n";
    for (const auto& row : payload["types"]) {
      if (row["semistable"].get<bool>()) {
        std::cout << "semistable,,,,\n";
      } else {
        std::cout << "unstable," << row["parts"][0][1] << ","
                  << row["parts"][1][1] << "," << row["codim_chi_bound"] << ",";
        if (!row["codim_exact"].is_null()) std::cout << row["codim_exact"];
        std::cout << "\n";
      }
    }
    return 0;
  }
  std::cout << "type                polygon                     codim(chi)  codim(exact)\n";
  for (const auto& row : payload["types"]) {
    std::ostringstream type, poly;
    for (const auto& p : row["parts"])
      type << "(" << p[0] << "," << p[1] << ")";
    for (const auto& v : row["polygon"])
      poly << "(" << v[0] << "," << v[1] << ")";
    std::cout << std::left << std::setw(20) << type.str() << std::setw(28)
              << poly.str();
    if (row["semistable"].get<bool>()) {
      std::cout << "-           -";
    } else {
      std::cout << std::setw(12) << row["codim_chi_bound"].get<int>();
      if (row["codim_exact"].is_null())
        std::cout << "(open)";
      else
        std::cout << row["codim_exact"].get<int>();
    }
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ stabilize ----

nlohmann::json stabilize_payload(const RunConfig& cfg) {
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::vector<std::string>> table;
  for (int n = 0; n <= cfg.maxn; ++n) {
    auto series = higgs::morse::higgs_poincare_morse({cfg.g, n, cfg.d});
    std::vector<std::string> coeffs;
    nlohmann::json jrow = nlohmann::json::array();
    for (int i = 0; i <= cfg.through_degree; ++i) {
      coeffs.push_back(series.coeff(i).get_str());
      jrow.push_back(coeffs.back());
    }
    table.push_back(std::move(coeffs));
    rows.push_back({{"n", n}, {"coeffs", std::move(jrow)}});
  }
  auto bgbar = higgs::morse::classifying_space_poincare(cfg.g, cfg.through_degree);
  nlohmann::json jbg = nlohmann::json::array();
  nlohmann::json stabilized = nlohmann::json::array();
  for (int i = 0; i <= cfg.through_degree; ++i) {
    std::string limit = bgbar.coeff(i).get_str();
    jbg.push_back(limit);
    int from = -1;
    for (int n = cfg.maxn; n >= 0; --n) {
      if (table[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] != limit)
        break;
      from = n;
    }
    if (from >= 0)
      stabilized.push_back(from);
    else
      stabilized.push_back(nullptr);
  }
  return {{"command", "stabilize"},
          {"g", cfg.g},
          {"d", cfg.d},
          {"maxn", cfg.maxn},
          {"through_degree", cfg.through_degree},
          {"rows", std::move(rows)},
          {"bgbar", std::move(jbg)},
          {"stabilized_at", std::move(stabilized)}};
}

int run_stabilize(const RunConfig& cfg) {
  if (cfg.d % 2 == 0) throw CLI::ValidationError("stabilize", "d must be odd");
  if (cfg.maxn < 1) throw CLI::ValidationError("stabilize", "--maxn must be >= 1");
  if (cfg.through_degree < 0)
    throw CLI::ValidationError("stabilize", "--deg must be >= 0");

  higgs::cache::Key key{"stabilize",
                        {{"g", cfg.g},
                         {"d", cfg.d},
                         {"maxn", cfg.maxn},
                         {"deg", cfg.through_degree}},
                        kCacheVersion};
  nlohmann::json payload =
      with_cache(cfg, key, [&] { return stabilize_payload(cfg); });

  if (cfg.format == "json") {
    std::cout << payload.dump(2) << "\n";
    return 0;
  }
  if (cfg.format == "csv") {
    std::cout << "series,degree,coefficient\n";
    for (const auto& row : payload["rows"])
      for (std::size_t i = 0; i < row["coeffs"].size(); ++i)
        std::cout << "n=" << row["n"] << "," << i << ","
                  << row["coeffs"][i].get<std::string>() << "\n";
    for (std::size_t i = 0; i < payload["bgbar"].size(); ++i)
      std::cout << "bgbar," << i << "," << payload["bgbar"][i].get<std::string>()
                << "\n";
    return 0;
  }
  std::cout << "deg |";
  for (const auto& row : payload["rows"]) std::cout << std::setw(8) << ("n=" + row["n"].dump());
  std::cout << " |   BGbar | stable from\n";
  for (int i = 0; i <= cfg.through_degree; ++i) {
    std::cout << std::setw(3) << i << " |";
    for (const auto& row : payload["rows"])
      std::cout << std::setw(8) << row["coeffs"][static_cast<std::size_t>(i)].get<std::string>();
    std::cout << " |" << std::setw(8)
              << payload["bgbar"][static_cast<std::size_t>(i)].get<std::string>()
              << " | ";
    const auto& from = payload["stabilized_at"][static_cast<std::size_t>(i)];
    if (from.is_null())
      std::cout << "not yet";
    else
      std::cout << "n=" << from;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of rank-2 Higgs-bundle moduli spaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.cache_dir = default_cache_dir();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--cache-dir", cfg.cache_dir, "Result cache directory");
    cmd->add_flag("--no-cache", cfg.no_cache, "Bypass the result cache");
    cmd->add_flag("--verify-cache", cfg.verify_cache,
                  "Recompute on cache hits and fail on any byte difference");
    cmd->add_flag("--verbose", cfg.verbose, "Progress notes on stderr");
  };

  CLI::App* betti = app.add_subcommand(
      "betti", "Poincare series of H_n from the ring presentation and/or the "
               "perfect-Morse stratification");
  betti->add_option("--g", cfg.g, "Genus (>= 1)")->required();
  betti->add_option("--n", cfg.n, "Pole order of K(n)")->capture_default_str();
  betti->add_option("--d", cfg.d, "Degree (odd)")->capture_default_str();
  betti->add_option("--side", cfg.side, "Which computation to run")
      ->check(CLI::IsMember({"ring", "morse", "both"}))
      ->capture_default_str();
  betti->add_option(
      "--maxdeg", cfg.maxdeg,
      "Truncate the ring-side computation at this degree (side=ring only; "
      "default: the full exact polynomial)");
  add_common(betti);

  CLI::App* strata = app.add_subcommand(
      "strata", "Harder-Narasimhan types with Shatz polygons and codimensions");
  strata->add_option("--g", cfg.g, "Genus")->required();
  strata->add_option("--n", cfg.n, "Pole order of K(n)")->capture_default_str();
  strata->add_option("--r", cfg.r, "Rank (2 only)")->capture_default_str();
  strata->add_option("--d", cfg.d, "Degree (odd)")->capture_default_str();
  strata->add_option("--max", cfg.max_top,
                     "Largest top degree d1 to enumerate (default (d+1)/2+3)");
  add_common(strata);

  CLI::App* stabilize = app.add_subcommand(
      "stabilize",
      "Coefficients of P_t(H_n) for n = 0..maxn against the classifying-space row");
  stabilize->add_option("--g", cfg.g, "Genus")->required();
  stabilize->add_option("--d", cfg.d, "Degree (odd)")->capture_default_str();
  stabilize->add_option("--maxn", cfg.maxn, "Largest pole order")->capture_default_str();
  stabilize->add_option("--deg", cfg.through_degree, "Report through this degree")
      ->capture_default_str();
  add_common(stabilize);

  try {
    app.parse(argc, argv);
    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    if (betti->parsed()) rc = run_betti(cfg);
    if (strata->parsed()) rc = run_strata(cfg);
    if (stabilize->parsed()) rc = run_stabilize(cfg);
    if (cfg.verbose) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::cerr << "done in " << ms << " ms\n";
    }
    return rc;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const MismatchError& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
