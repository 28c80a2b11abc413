// torkh: command-line front end for the homology engine, the prediction
// formulas and the verification harness.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "torkh/errors.hpp"
#include "torkh/formulas.hpp"
#include "torkh/homology.hpp"
#include "torkh/io.hpp"
#include "torkh/jones.hpp"
#include "torkh/lee.hpp"
#include "torkh/verify.hpp"

using namespace torkh;

namespace {

struct Common {
  std::string ring;
  std::string format = "table";
  std::string cache_dir;
  std::size_t max_generators = ScanOptions{}.max_generators;
  bool slow = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VerifyContext context(const Common& c) {
  VerifyContext ctx;
  ctx.cache = ResultCache::from_env(c.cache_dir.empty() ? std::nullopt : std::optional<std::string>(c.cache_dir));
  ctx.scan.max_generators = c.max_generators;
  return ctx;
}

CoefficientRing ring_or(const Common& c, const char* fallback) {
  return CoefficientRing::parse(c.ring.empty() ? fallback : c.ring);
}

std::pair<int, int> torus_params(const std::string& spec) {
  const std::string head = "torus:";
  if (spec.rfind(head, 0) != 0) throw UsageError("expected torus:<n>,<m>, got " + spec);
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw UsageError("expected torus:<n>,<m>, got " + spec);
  try {
    return {std::stoi(spec.substr(head.size(), comma - head.size())), std::stoi(spec.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("bad torus parameters in " + spec);
  }
}

void emit_table(const BigradedTable& t, const std::string& format, Json extra = Json::object()) {
  if (format == "json") {
    Json j = table_to_json(t);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump() << '\n';
  } else if (format == "csv") {
    std::cout << render_csv(t);
  } else {
    std::cout << render_table(t);
  }
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (format == "json") {
      std::cout << r.to_json().dump() << '\n';
      continue;
    }
    std::cout << r.claim << ' ' << r.params.dump() << ": " << status_name(r.status) << " (" << r.elapsed_ms
              << " ms)";
    if (r.witness)
      std::cout << " at h=" << r.witness->h << " q=" << r.witness->q << " expected " << r.witness->expected
                << ", got " << r.witness->got;
    if (r.details.contains("reason")) std::cout << " [" << r.details["reason"].get<std::string>() << ']';
    std::cout << '\n';
  }
  return ok ? 0 : 1;
}

void require_slow(const Common& c, int n, int limit = 6) {
  if (n >= limit && !c.slow) throw UsageError("n >= " + std::to_string(limit) + " needs --slow");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov and Lee homology of links, with torus-link predictions"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--ring", c.ring, "Coefficients: Z, Q, F2, F3, F5, ...");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cache-dir", c.cache_dir, "Result cache directory (default $TORKH_CACHE)");
  app.add_option("--max-generators", c.max_generators, "Generator budget for the scanning reduction");
  app.add_flag("--slow", c.slow, "Allow the large (n >= 6) verification targets");
  app.fallthrough();

  std::string link, orient, family = "nn", what;
  int n = 0, m = 0, i = 0;

  auto* kh = app.add_subcommand("kh", "Khovanov homology table");
  kh->add_option("link", link, "Link spec")->required();

  auto* lee = app.add_subcommand("lee", "Associated graded Lee (char 2: Bar-Natan) homology");
  lee->add_option("link", link, "Link spec")->required();

  auto* s = app.add_subcommand("s", "s-invariant of an oriented link");
  s->add_option("link", link, "Link spec")->required();
  s->add_option("--orientation", orient, "Components to reverse, e.g. rev=1,3");

  auto* jones = app.add_subcommand("jones", "Unnormalized Jones polynomial via the Kauffman state sum");
  jones->add_option("link", link, "Link spec")->required();

  auto* predict = app.add_subcommand("predict", "Closed-form predictions");
  predict->add_option("what", what, "gr | s | lee-rank | staircase | L | K | q-relations")
      ->required()
      ->check(CLI::IsMember({"gr", "s", "lee-rank", "staircase", "L", "K", "q-relations"}));
  predict->add_option("link", link, "torus:<n>,<m>");
  predict->add_option("--orientation", orient, "Components to reverse, e.g. rev=1");
  predict->add_option("--n", n);
  predict->add_option("--family", family)->check(CLI::IsMember({"nn", "n1n"}));

  auto* verify = app.add_subcommand("verify", "Check a statement against computed homology");
  verify->add_option("what", what, "lower-bound | les | recursions | filtration | q-relations")
      ->required()
      ->check(CLI::IsMember({"lower-bound", "les", "recursions", "filtration", "q-relations"}));
  verify->add_option("--n", n)->required();
  verify->add_option("--m", m);
  verify->add_option("--i", i);
  verify->add_option("--family", family)->check(CLI::IsMember({"nn", "n1n"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Family fam = family == "nn" ? Family::nn : Family::n1n;
    if (*kh) {
      auto ctx = context(c);
      emit_table(khovanov_table(parse_link_spec(link).diagram, ring_or(c, "Z"), ctx), c.format);
      return 0;
    }
    if (*lee) {
      auto f = ring_or(c, "Q");
      ScanOptions so;
      so.max_generators = c.max_generators;
      auto ft = lee_filtration(parse_link_spec(link).diagram, f, so);
      emit_table(gr_dimensions(ft), c.format, Json{{"filtration", filtration_to_json(ft)["tables"]}});
      return 0;
    }
    if (*s) {
      auto f = ring_or(c, "Q");
      auto rev = orient.empty() ? std::vector<int>{} : parse_orientation_subset(orient);
      ScanOptions so;
      so.max_generators = c.max_generators;
      auto res = s_invariant(parse_link_spec(link).diagram, rev, f, so);
      if (c.format == "json") {
        Json j{{"s", res.s}, {"orientation", rev}, {"field", f.name()}};
        if (res.experimental) j["experimental"] = true;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << res.s << (res.experimental ? " (experimental: characteristic 2)" : "") << '\n';
      }
      return 0;
    }
    if (*jones) {
      auto p = jones_kauffman(parse_link_spec(link).diagram);
      if (c.format == "json") {
        Json terms = Json::array();
        for (const auto& [k, v] : p.terms()) terms.push_back({{"q", k.second}, {"coeff", v.str()}});
        std::cout << Json{{"jones", p.str()}, {"terms", terms}}.dump() << '\n';
      } else {
        std::cout << p.str() << '\n';
      }
      return 0;
    }
    if (*predict) {
      auto need_torus = [&] {
        if (link.empty()) throw UsageError("predict " + what + " needs torus:<n>,<m>");
        return torus_params(link);
      };
      if (what == "gr") {
        auto [tn, tm] = need_torus();
        emit_table(gr_lee_torus(tn, tm), c.format);
      } else if (what == "s") {
        auto [tn, tm] = need_torus();
        const int d = std::gcd(tn, std::abs(tm));
        const int q = orient.empty() ? 0 : static_cast<int>(parse_orientation_subset(orient).size());
        const int v = s_torus(tn, tm, d - q, q);
        if (c.format == "json")
          std::cout << Json{{"s", v}, {"p", d - q}, {"q", q}}.dump() << '\n';
        else
          std::cout << v << '\n';
      } else if (what == "lee-rank") {
        auto [tn, tm] = need_torus();
        Json j = Json::array();
        for (auto [h, v] : lee_rank_torus(tn, tm)) {
          if (c.format == "json")
            j.push_back({{"h", h}, {"dim", v}});
          else
            std::cout << h << ": " << v << '\n';
        }
        if (c.format == "json") std::cout << j.dump() << '\n';
      } else if (what == "staircase") {
        if (n < 1) throw UsageError("predict staircase needs --n");
        Json j = Json::array();
        for (int h = 0; h <= h_max(n, fam); ++h) {
          const ExtInt v = fam == Family::nn ? q_nn(n, h) : q_n1n(n, h);
          if (c.format == "json")
            j.push_back({{"h", h}, {"q", v}});
          else
            std::cout << h << ": " << v << '\n';
        }
        if (c.format == "json") std::cout << j.dump() << '\n';
      } else if (what == "L" || what == "K") {
        if (n < 0) throw UsageError("predict " + what + " needs --n >= 0");
        auto p = what == "L" ? L_poly(n) : K_poly(n);
        BigradedTable t;
        for (const auto& [k, v] : p.terms()) t.set(k.first, k.second, {v.convert_to<std::int64_t>(), {}});
        emit_table(t, c.format);
      } else {
        if (n < 3) throw UsageError("predict q-relations needs --n >= 3");
        auto rep = check_q_relations(n);
        for (const auto& v : rep.violations)
          std::cout << v.relation << " at h=" << v.h << ": " << v.lhs << " vs " << v.rhs << '\n';
        std::cout << (rep.ok() ? "all relations hold" : "violations found") << '\n';
        return rep.ok() ? 0 : 1;
      }
      return 0;
    }
    if (*verify) {
      auto ctx = context(c);
      std::vector<VerificationReport> reports;
      if (what == "lower-bound") {
        require_slow(c, n);
        reports.push_back(verify_lower_bound(n, fam, ring_or(c, "Q"), ctx));
      } else if (what == "les") {
        require_slow(c, n);
        const int mm = m ? m : n - 1;
        if (i) {
          reports.push_back(verify_les_additivity(n, mm, i, ring_or(c, "Q"), ctx));
        } else {
          for (int k = 1; k < n; ++k) reports.push_back(verify_les_additivity(n, mm, k, ring_or(c, "Q"), ctx));
        }
      } else if (what == "recursions") {
        require_slow(c, n, 5);
        reports.push_back(verify_recursions(n, ctx));
      } else if (what == "filtration") {
        require_slow(c, std::max(n, m ? m : n), 7);
        reports.push_back(verify_filtration(n, m ? m : n, ctx));
      } else {
        auto rep = check_q_relations(n);
        VerificationReport r;
        r.claim = "q-relations";
        r.params = {{"n", n}};
        r.status = rep.ok() ? Status::pass : Status::fail;
        if (!rep.ok()) {
          const auto& v = rep.violations.front();
          r.witness = Witness{v.h, 0, v.relation, std::to_string(v.lhs) + " vs " + std::to_string(v.rhs)};
        }
        reports.push_back(r);
      }
      return emit_reports(reports, c.format);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
