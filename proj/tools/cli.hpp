#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The eulerq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Command-line front end. Kept in a header so the test suite can drive the
// commands in-process.

#include "eulerq/eulerq.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eulerq::cli {

enum exit_code : int
{
  ok                 = 0,
  check_failed       = 1,
  usage_error        = 2,
  terms_exceeded     = 3,
};

/// Parses "re" or "re,im".
inline complex parse_complex(std::string const &s)
{
  auto parse_real = [&s](std::string const &part) {
    std::size_t pos = 0;
    double      v   = 0.0;
    try
    {
      v = std::stod(part, &pos);
    }
    catch (std::exception const &)
    {
      throw domain_error("not a number: '" + s + "'");
    }
    if (pos != part.size())
    {
      throw domain_error("not a number: '" + s + "'");
    }
    return v;
  };
  std::size_t const comma = s.find(',');
  if (comma == std::string::npos)
  {
    return parse_real(s);
  }
  return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
}

/// Shortest decimal form that round-trips.
inline std::string shortest(double v)
{
  char buf[64];
  auto const res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string shortest(complex z)
{
  if (z.imag() == 0.0)
  {
    return shortest(z.real());
  }
  std::string im = shortest(z.imag());
  if (im[0] != '-')
  {
    im = "+" + im;
  }
  return shortest(z.real()) + im + "i";
}

inline std::string g17(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline nlohmann::json pair_json(complex z)
{
  return nlohmann::json::array({z.real(), z.imag()});
}

/// Evaluation settings shared by every command.
struct Settings
{
  std::optional<double>      eps;
  std::optional<std::size_t> max_terms;

  EvalConfig config() const
  {
    EvalConfig cfg;
    if (char const *e = std::getenv("EULERQ_EPS"))
    {
      cfg.eps = parse_complex(e).real();
    }
    if (char const *m = std::getenv("EULERQ_MAX_TERMS"))
    {
      cfg.max_terms = static_cast<std::size_t>(std::stoull(m));
    }
    if (eps)
    {
      cfg.eps = *eps;
    }
    if (max_terms)
    {
      cfg.max_terms = *max_terms;
    }
    cfg.validate();
    return cfg;
  }
};

/// Arguments beyond q and x used by some functions.
struct Extra
{
  complex  t = 0.5;
  unsigned s = 1;
};

inline std::vector<std::string> const &function_names()
{
  static std::vector<std::string> const names{
      "s_q",          "s_q_taylor",     "s_q_onemxk",    "s_q_qintegral", "f_q",         "f_q_divisor",
      "f_q_xexp",     "f_q_qintegral",  "g_kernel",      "li2q",          "li2q_taylor", "li2q_qintegral",
      "zeta_q",       "e_q",            "E_q",           "qpoch_inf",     "classical_li2", "tsallis_lnq",
      "borwein_lnq",  "kirillov_logq",  "kirillov_li2",  "zudilin_l1",    "zudilin_l2"};
  return names;
}

/// Evaluates a named function at (q, x).
inline SeriesValue evaluate(std::string const &fn, double q, complex x, Extra const &extra, EvalConfig const &cfg)
{
  if (fn == "tsallis_lnq")
  {
    if (x.imag() != 0.0)
    {
      throw domain_error("tsallis_lnq: x must be real");
    }
    return {tsallis_lnq(x.real(), q), 0.0, 1};
  }
  if (fn == "borwein_lnq")
  {
    return borwein_lnq(x, q, cfg);
  }
  if (fn == "classical_li2")
  {
    return classical_li2(x, cfg);
  }
  QParam const qp(q);
  if (fn == "s_q")
  {
    return s_q(x, qp, cfg);
  }
  if (fn == "s_q_taylor")
  {
    return s_q_taylor(x, qp, cfg);
  }
  if (fn == "s_q_onemxk")
  {
    return s_q_onemxk(x, qp, cfg);
  }
  if (fn == "s_q_qintegral")
  {
    return s_q_via_qintegral(x, qp, cfg);
  }
  if (fn == "f_q")
  {
    return f_q(x, extra.t, qp, cfg);
  }
  if (fn == "f_q_divisor")
  {
    return f_q_divisor_expansion(x, extra.t, qp, cfg);
  }
  if (fn == "f_q_xexp")
  {
    return f_q_x_expansion(x, extra.t, qp, cfg);
  }
  if (fn == "f_q_qintegral")
  {
    if (extra.t.imag() != 0.0)
    {
      throw domain_error("f_q_qintegral: t must be real");
    }
    return f_q_via_qintegral(x, extra.t.real(), qp, cfg);
  }
  if (fn == "g_kernel")
  {
    return g_kernel({qp, x, extra.t}, cfg);
  }
  if (fn == "li2q")
  {
    return li2q(x, qp, cfg);
  }
  if (fn == "li2q_taylor")
  {
    return li2q_taylor(x, qp, cfg);
  }
  if (fn == "li2q_qintegral")
  {
    return li2q_via_qintegral(x, qp, cfg);
  }
  if (fn == "zeta_q")
  {
    return zeta_q(extra.s, qp, cfg);
  }
  if (fn == "e_q")
  {
    return e_q(x, qp, cfg);
  }
  if (fn == "E_q")
  {
    return E_q(x, qp, cfg);
  }
  if (fn == "qpoch_inf")
  {
    return qpochhammer_inf(x, qp, cfg);
  }
  if (fn == "kirillov_logq")
  {
    return kirillov_logq(x, qp, cfg);
  }
  if (fn == "kirillov_li2")
  {
    return kirillov_li2(x, qp, cfg);
  }
  if (fn == "zudilin_l1")
  {
    return zudilin_l(x, qp, 1, cfg);
  }
  if (fn == "zudilin_l2")
  {
    return zudilin_l(x, qp, 2, cfg);
  }
  throw domain_error("unknown function: " + fn);
}

/// Runs `body`, mapping library errors to the exit-code contract.
inline int guarded(std::ostream &err, std::function<int()> const &body)
{
  try
  {
    return body();
  }
  catch (max_terms_exceeded const &e)
  {
    err << "error: " << e.what() << "\n";
    return terms_exceeded;
  }
  catch (std::exception const &e)
  {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

inline std::vector<double> parse_real_list(std::vector<std::string> const &items)
{
  std::vector<double> out;
  for (std::string const &s : items)
  {
    out.push_back(parse_complex(s).real());
  }
  return out;
}

/// Splits "a;b;c" lists of complex points. Commas separate real and imaginary parts.
inline std::vector<complex> parse_point_list(std::string const &s)
{
  std::vector<complex> out;
  std::stringstream    ss(s);
  std::string          item;
  while (std::getline(ss, item, ';'))
  {
    if (!item.empty())
    {
      out.push_back(parse_complex(item));
    }
  }
  return out;
}

inline nlohmann::json report_json(IdentityReport const &report)
{
  nlohmann::json cases = nlohmann::json::array();
  for (CaseResult const &c : report.cases)
  {
    nlohmann::json j{
        {"id", c.id},
        {"max_residual", std::isfinite(c.max_residual) ? nlohmann::json(c.max_residual) : nlohmann::json()},
        {"argmax", {{"q", c.argmax_q}, {"point", pair_json(c.argmax_point)}}},
        {"pass", c.pass},
        {"tolerance", c.tolerance},
        {"informational", c.informational}};
    if (!c.error.empty())
    {
      j["error"] = c.error;
    }
    cases.push_back(std::move(j));
  }
  return {{"summary", {{"total", report.total}, {"passed", report.passed}, {"failed", report.failed}}},
          {"cases", std::move(cases)}};
}

/// Writes to `path`, or to `out` when path is empty or "-".
inline void emit(std::string const &path, std::string const &text, std::ostream &out)
{
  if (path.empty() || path == "-")
  {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush())
  {
    throw domain_error("cannot write output file: " + path);
  }
}

/// Entry point; returns the process exit code.
inline int run(int argc, char const *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
  CLI::App app{"Euler's q-logarithm and related q-series"};
  app.require_subcommand(1);

  Settings settings;
  auto     add_settings = [&settings](CLI::App *sub) {
    sub->add_option("--eps", settings.eps, "target relative tolerance (env EULERQ_EPS)");
    sub->add_option("--max-terms", settings.max_terms, "term cap per series (env EULERQ_MAX_TERMS)");
  };

  std::string fn;
  double      q = 0.5;
  std::string x_arg = "0";
  std::string t_arg = "0.5";
  unsigned    s     = 1;
  bool        json  = false;

  CLI::App *eval = app.add_subcommand("eval", "evaluate a function at one point");
  eval->add_option("fn", fn, "function name")->required();
  eval->add_option("--q", q, "base q")->required();
  eval->add_option("--x", x_arg, "argument, re or re,im");
  eval->add_option("--t", t_arg, "second argument of f_q and g_kernel, or the base p of f_q_qintegral");
  eval->add_option("--s", s, "order of zeta_q");
  eval->add_flag("--json", json, "emit JSON");
  add_settings(eval);

  double      x_from = 0.0;
  double      x_to   = 1.0;
  int         steps  = 2;
  std::string format = "csv";
  std::string out_path;
  CLI::App   *table = app.add_subcommand("table", "tabulate a function over a real range");
  table->add_option("fn", fn, "function name")->required();
  table->add_option("--q", q, "base q")->required();
  table->add_option("--from", x_from, "first x")->required();
  table->add_option("--to", x_to, "last x")->required();
  table->add_option("--steps", steps, "number of grid points, at least 2")->required();
  table->add_option("--t", t_arg, "second argument where needed");
  table->add_option("--s", s, "order of zeta_q");
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "output file (default stdout)");
  add_settings(table);

  std::vector<std::string> only;
  std::vector<std::string> grid_q;
  std::string              grid_points;
  std::vector<int>         grid_powers;
  CLI::App                *check = app.add_subcommand("check", "verify the registered identities");
  check->add_option("--only", only, "case ids to run")->delimiter(',');
  check->add_option("--q", grid_q, "override q values")->delimiter(',');
  check->add_option("--points", grid_points, "override points, ';'-separated, each re or re,im");
  check->add_option("--q-powers", grid_powers, "override q-power points")->delimiter(',');
  check->add_option("--out", out_path, "report file (default stdout)");
  check->add_flag("--list", json, "print the case ids and exit");

  std::optional<unsigned> zeta_s;
  CLI::App               *zeta = app.add_subcommand("zeta", "q-zeta values");
  zeta->add_option("--q", q, "base q")->required();
  zeta->add_option("--s", zeta_s, "order; default prints s = 1, 2 in both representations");
  zeta->add_flag("--json", json, "emit JSON");
  add_settings(zeta);

  std::vector<std::string> xs;
  CLI::App                *cmp = app.add_subcommand("compare-log", "compare -ln(q) S_q(x) with ln x");
  cmp->add_option("--q", q, "base q")->required();
  cmp->add_option("--x", xs, "positive arguments")->required()->delimiter(',');
  cmp->add_option("--out", out_path, "output file (default stdout)");
  add_settings(cmp);

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    out << app.help();
    return ok;
  }
  catch (CLI::CallForAllHelp const &e)
  {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  }
  catch (CLI::ParseError const &e)
  {
    if (e.get_exit_code() == 0)
    {
      out << e.what() << "\n";
      return ok;
    }
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  }

  if (eval->parsed())
  {
    return guarded(err, [&] {
      EvalConfig const  cfg = settings.config();
      Extra const       extra{parse_complex(t_arg), s};
      complex const     x = parse_complex(x_arg);
      SeriesValue const v = evaluate(fn, q, x, extra, cfg);
      if (json)
      {
        nlohmann::json j{{"fn", fn},
                         {"q", q},
                         {"x", pair_json(x)},
                         {"value", pair_json(v.value)},
                         {"err", v.err_estimate},
                         {"terms", v.terms_used}};
        out << j.dump() << "\n";
      }
      else
      {
        out << shortest(v.value) << "\n"
            << "err " << shortest(v.err_estimate) << "\n"
            << "terms " << v.terms_used << "\n";
      }
      return int(ok);
    });
  }

  if (table->parsed())
  {
    return guarded(err, [&] {
      if (steps < 2)
      {
        throw domain_error("table: --steps must be at least 2");
      }
      EvalConfig const cfg = settings.config();
      Extra const      extra{parse_complex(t_arg), s};
      std::string      text;
      nlohmann::json   rows = nlohmann::json::array();
      if (format == "csv")
      {
        text = "x,value_re,value_im,err,terms\n";
      }
      for (int i = 0; i < steps; ++i)
      {
        double const      x = (i == steps - 1) ? x_to : x_from + (x_to - x_from) * i / (steps - 1);
        SeriesValue const v = evaluate(fn, q, x, extra, cfg);
        if (format == "csv")
        {
          text += g17(x) + "," + g17(v.value.real()) + "," + g17(v.value.imag()) + "," + g17(v.err_estimate) +
                  "," + std::to_string(v.terms_used) + "\n";
        }
        else
        {
          rows.push_back({{"x", x},
                          {"value_re", v.value.real()},
                          {"value_im", v.value.imag()},
                          {"err", v.err_estimate},
                          {"terms", v.terms_used}});
        }
      }
      if (format == "json")
      {
        text = nlohmann::json{{"fn", fn}, {"q", q}, {"rows", rows}}.dump(2) + "\n";
      }
      emit(out_path, text, out);
      return int(ok);
    });
  }

  if (check->parsed())
  {
    if (json)
    {
      for (IdentityCase const &c : registry_list())
      {
        out << c.id << "  " << c.description << "\n";
      }
      return ok;
    }
    std::optional<std::vector<std::string>> selection;
    if (!only.empty())
    {
      selection = only;
    }
    std::optional<GridSpec> grid;
    try
    {
      for (std::string const &id : only)
      {
        registry_lookup(id);
      }
      if (!grid_q.empty() || !grid_points.empty() || !grid_powers.empty())
      {
        grid = GridSpec{parse_real_list(grid_q), parse_point_list(grid_points), grid_powers};
        for (double const qv : grid->q_values)
        {
          QParam const validated(qv);
        }
      }
    }
    catch (std::exception const &e)
    {
      err << "error: " << e.what() << "\n";
      return usage_error;
    }
    return guarded(err, [&] {
      IdentityReport const report = run_checks(selection, grid);
      emit(out_path, report_json(report).dump(2) + "\n", out);
      return report.gating_pass() ? int(ok) : int(check_failed);
    });
  }

  if (zeta->parsed())
  {
    return guarded(err, [&] {
      EvalConfig const cfg = settings.config();
      QParam const     qp(q);
      if (zeta_s)
      {
        SeriesValue const v = zeta_q(*zeta_s, qp, cfg);
        if (json)
        {
          out << nlohmann::json{{"q", q}, {"s", *zeta_s}, {"value", v.real()}, {"err", v.err_estimate},
                                {"terms", v.terms_used}}
                     .dump()
              << "\n";
        }
        else
        {
          out << shortest(v.real()) << "\n";
        }
        return int(ok);
      }
      SeriesValue const z1 = zeta_q(1, qp, cfg);
      SeriesValue const a1 = zeta1_alternating(qp, cfg);
      SeriesValue const z2 = zeta_q(2, qp, cfg);
      SeriesValue const a2 = zeta2_alternating(qp, cfg);
      if (json)
      {
        auto entry = [](SeriesValue const &v) {
          return nlohmann::json{{"value", v.real()}, {"err", v.err_estimate}, {"terms", v.terms_used}};
        };
        out << nlohmann::json{{"q", q},
                              {"zeta1", entry(z1)},
                              {"zeta1_alternating", entry(a1)},
                              {"zeta2", entry(z2)},
                              {"zeta2_alternating", entry(a2)}}
                   .dump()
            << "\n";
      }
      else
      {
        out << "zeta_q(1)              " << shortest(z1.real()) << "  (" << z1.terms_used << " terms)\n"
            << "  alternating series   " << shortest(a1.real()) << "  (" << a1.terms_used << " terms)\n"
            << "zeta_q(2)              " << shortest(z2.real()) << "  (" << z2.terms_used << " terms)\n"
            << "  alternating series   " << shortest(a2.real()) << "  (" << a2.terms_used << " terms)\n";
      }
      return int(ok);
    });
  }

  if (cmp->parsed())
  {
    return guarded(err, [&] {
      EvalConfig const cfg = settings.config();
      QParam const     qp(q);
      std::string      text = "x,ln_x,neg_ln_q_s_q,abs_err\n";
      for (double const x : parse_real_list(xs))
      {
        if (!(x > 0.0))
        {
          throw domain_error("compare-log: x must be positive");
        }
        double const lx  = std::log(x);
        double const est = -std::log(q) * s_q(x, qp, cfg).real();
        text += g17(x) + "," + g17(lx) + "," + g17(est) + "," + g17(std::abs(est - lx)) + "\n";
      }
      emit(out_path, text, out);
      return int(ok);
    });
  }
  return usage_error;
}

}  // namespace eulerq::cli
