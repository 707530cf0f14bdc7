/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/cli.hpp"

#include "eacqc/bounds.hpp"
#include "eacqc/concat.hpp"
#include "eacqc/error.hpp"
#include "eacqc/gf.hpp"
#include "eacqc/gv_ensemble.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eacqc {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
  throw Error(ErrorKind::ParseError, what);
}

std::vector<std::string> split_ws(const std::string &line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;)
    out.push_back(tok);
  return out;
}

std::uint64_t parse_uint(std::string_view s, const std::string &where) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    parse_fail(where + ": expected a non-negative integer, got '" +
               std::string(s) + "'");
  return v;
}

std::string strip_comment(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos)
    line.erase(pos);
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  return line;
}

Field field_from_header(const std::vector<std::string> &tokens,
                        std::size_t line_no) {
  const std::string where = "line " + std::to_string(line_no);
  if (tokens.empty() || tokens[0] != "q" ||
      (tokens.size() != 2 && tokens.size() != 4))
    parse_fail(where + ": header must be 'q <size> [poly <c0,...,cm>]'");
  const std::uint64_t size = parse_uint(tokens[1], where);
  if (size < 2 || size > GaloisField::max_size)
    parse_fail(where + ": field size " + tokens[1] + " out of range");

  std::uint64_t p = 2;
  while (size % p != 0)
    ++p;
  std::uint64_t rest = size;
  std::uint32_t m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    parse_fail(where + ": field size " + tokens[1] + " is not a prime power");

  std::optional<std::vector<std::uint32_t>> modulus;
  if (tokens.size() == 4) {
    if (tokens[2] != "poly")
      parse_fail(where + ": expected 'poly', got '" + tokens[2] + "'");
    std::vector<std::uint32_t> coeffs;
    std::istringstream ss(tokens[3]);
    for (std::string c; std::getline(ss, c, ',');)
      coeffs.push_back(static_cast<std::uint32_t>(parse_uint(c, where)));
    modulus = std::move(coeffs);
  }
  try {
    return GaloisField::make(static_cast<std::uint32_t>(p), m, modulus);
  } catch (const Error &e) {
    parse_fail(where + ": " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string &text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    parse_fail("range '" + text + "' must look like a..b");
  const auto lo = parse_uint(text.substr(0, dots), "range");
  const auto hi = parse_uint(text.substr(dots + 2), "range");
  if (lo > hi || hi > 1000)
    parse_fail("range '" + text + "' is empty or too large");
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::vector<std::int64_t> parse_ints(const std::string &text, std::size_t count,
                                     const std::string &what) {
  std::vector<std::int64_t> out;
  std::istringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      parse_fail(what + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.size() != count)
    parse_fail(what + ": expected " + std::to_string(count) +
               " comma-separated integers");
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Options {
  bool quiet = false;
  bool json = false;
};

void banner(std::ostream &out, const Options &o) {
  if (!o.quiet && !o.json)
    out << "eacqc " << version << '\n';
}

void emit_params(std::ostream &out, const Options &o, const EaqeccParams &p) {
  banner(out, o);
  out << (o.json ? describe_json(p) : describe(p)) << '\n';
}

} // namespace

Matrix read_matrix_file(std::istream &in) {
  Field field;
  std::vector<std::vector<std::uint32_t>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(strip_comment(line));
    if (tokens.empty())
      continue;
    if (!field) {
      field = field_from_header(tokens, line_no);
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    std::vector<std::uint32_t> row;
    row.reserve(tokens.size());
    for (const auto &t : tokens) {
      const auto v = parse_uint(t, where);
      if (v >= field->size())
        parse_fail(where + ": entry " + t + " is not below q=" +
                   std::to_string(field->size()));
      row.push_back(static_cast<std::uint32_t>(v));
    }
    if (!rows.empty() && row.size() != rows.front().size())
      parse_fail(where + ": ragged row of width " + std::to_string(row.size()) +
                 ", expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (!field)
    parse_fail("missing 'q <size>' header");
  if (rows.empty())
    parse_fail("matrix has no rows");
  return Matrix::from_rows(field, rows);
}

Matrix read_matrix_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    parse_fail("cannot open '" + path + "'");
  try {
    return read_matrix_file(in);
  } catch (const Error &e) {
    parse_fail(path + ": " + e.what());
  }
}

ClassicalCode read_code_file(const std::string &path, std::string_view kind) {
  const Matrix m = read_matrix_file(path);
  if (kind == "H")
    return ClassicalCode::from_parity_check(m);
  if (kind == "G")
    return ClassicalCode::from_generator(m);
  parse_fail("matrix kind must be H or G, got '" + std::string(kind) + "'");
}

EaqeccParams params_from_tuple(const std::string &text) {
  const TableTuple t = parse_tuple(text);
  if (t.net || !t.c)
    parse_fail("tuple '" + text + "' must be n,k,d,c,q");
  return EaqeccParams::literal(t.q, t.n, t.k, Distance::lower_bound(t.d), *t.c);
}

std::string tuple_string(const EaqeccParams &p) {
  TableTuple t;
  t.n = p.n;
  t.k = p.k;
  t.d = p.d.value;
  t.c = p.c;
  t.q = p.q;
  return t.to_string();
}

std::string describe(const EaqeccParams &p) {
  std::string s = format(p) + " net=" + std::to_string(p.net());
  if (p.d.known()) {
    const auto r = ea_singleton_defect(p);
    s += " hbar_e=" + std::to_string(r.defect) + " class=" +
         std::string(to_string(r.cls));
  }
  if (p.maximal())
    s += " maximal";
  return s;
}

std::string describe_json(const EaqeccParams &p) {
  nlohmann::ordered_json j;
  j["tuple"] = tuple_string(p);
  j["params"] = format(p);
  j["q"] = p.q;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.d.value;
  j["d_kind"] = p.d.kind == Distance::Kind::Exact ? "exact" : "lower_bound";
  j["c"] = p.c;
  j["net"] = p.net();
  const auto r = ea_singleton_defect(p);
  j["hbar_e"] = r.defect;
  j["class"] = to_string(r.cls);
  j["maximal"] = p.maximal();
  j["provenance"] = to_string(p.provenance);
  return j.dump();
}

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  Options opt;
  CLI::App app{"Entanglement-assisted concatenated quantum code toolkit",
               "eacqc"};
  app.set_version_flag("--version", std::string(version));
  app.add_flag("--quiet", opt.quiet, "Suppress the version banner");
  app.add_flag("--json", opt.json, "Emit JSON-lines records");
  app.require_subcommand(1);
  app.fallthrough();

  std::string kind = "H";
  std::uint64_t budget = default_enumeration_budget;

  auto *css = app.add_subcommand("css", "CSS construction from two codes");
  std::string c1_path, c2_path;
  css->add_option("--c1", c1_path, "First code matrix file")->required();
  css->add_option("--c2", c2_path, "Second code matrix file")->required();
  css->add_option("--kind", kind, "Matrix kind: H (parity check) or G");
  css->add_option("--budget", budget, "Distance enumeration budget");

  auto *herm = app.add_subcommand("hermitian",
                                  "Hermitian construction over GF(base^2)");
  std::string code_path;
  std::uint32_t base = 2;
  herm->add_option("--code", code_path, "Code matrix file")->required();
  herm->add_option("--base", base, "Base field size q")->required();
  herm->add_option("--kind", kind, "Matrix kind: H (parity check) or G");
  herm->add_option("--budget", budget, "Distance enumeration budget");

  std::string inner_t, outer_t, code_t;
  std::int64_t amount = 0;
  auto *cat = app.add_subcommand("concat", "Concatenate two parameter sets");
  cat->add_option("--inner", inner_t, "Inner n,k,d,c,q")->required();
  cat->add_option("--outer", outer_t, "Outer n,k,d,c,q")->required();

  auto *ext = app.add_subcommand("extend", "Pad t positions");
  ext->add_option("--code", code_t, "n,k,d,c,q")->required();
  ext->add_option("--t", amount, "Positions to add")->required();

  auto *exp = app.add_subcommand(
      "expurgate", "Replace t inner [[4,2,2;0]]_2 blocks by [[3,2,2;1]]_2");
  exp->add_option("--inner", inner_t, "Inner n,k,d,c,q")->required();
  exp->add_option("--outer", outer_t, "Outer n,k,d,c,q")->required();
  exp->add_option("--t", amount, "Blocks to replace")->required();

  auto *aud = app.add_subcommand("audit", "Re-derive a table file");
  std::string tables_path;
  bool allow_known = false;
  aud->add_option("--tables", tables_path, "Table data file")->required();
  aud->add_flag("--allow-known", allow_known,
                "Do not fail on allowlisted mismatches");

  auto *bnd = app.add_subcommand("bounds", "Sample asymptotic rate curves");
  std::string family_name, m_range, out_path;
  int m_single = 0;
  double ce = 0.0, step = 0.001;
  std::optional<double> delta_max;
  bnd->add_option("--family", family_name, "P1a P1b C5 C6 C7 C8 GV")
      ->required();
  auto *m_opt = bnd->add_option("--m", m_single, "Single extension degree");
  auto *r_opt = bnd->add_option("--m-range", m_range, "Degrees a..b");
  m_opt->excludes(r_opt);
  bnd->add_option("--ce", ce, "Entanglement rate (GV)");
  bnd->add_option("--delta-step", step, "Grid step");
  bnd->add_option("--delta-max", delta_max, "Grid end");
  bnd->add_option("--out", out_path, "CSV output file");

  auto *gv = app.add_subcommand("gv", "Ensemble bound at one distance");
  std::string spec_t;
  double delta = 0.0;
  gv->add_option("--spec", spec_t, "n1,k1,c1,n2,k2,c2")->required();
  gv->add_option("--delta", delta, "Relative distance")->required();

  auto *md = app.add_subcommand("mindist", "Brute-force minimum distance");
  md->add_option("--code", code_path, "Code matrix file")->required();
  md->add_option("--kind", kind, "Matrix kind: H (parity check) or G");
  md->add_option("--budget", budget, "Enumeration budget");

  auto *ens = app.add_subcommand("ensemble", "Exhaustive syndrome ensemble");
  std::uint32_t ens_field = 4;
  std::int64_t ens_n = 2, ens_k = 1;
  ens->add_option("--field", ens_field, "4 or 16");
  ens->add_option("--n", ens_n, "Length");
  ens->add_option("--k", ens_k, "Dimension");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (css->parsed()) {
      const auto a = with_computed_distance(read_code_file(c1_path, kind), budget);
      const auto b = with_computed_distance(read_code_file(c2_path, kind), budget);
      emit_params(out, opt, css_construct(a, b));
      return ExitOk;
    }
    if (herm->parsed()) {
      const auto code =
          with_computed_distance(read_code_file(code_path, kind), budget);
      emit_params(out, opt, hermitian_construct(code, base));
      return ExitOk;
    }
    if (cat->parsed()) {
      emit_params(out, opt,
                  concatenate(params_from_tuple(inner_t),
                              params_from_tuple(outer_t)));
      return ExitOk;
    }
    if (ext->parsed()) {
      emit_params(out, opt, extend(params_from_tuple(code_t), amount));
      return ExitOk;
    }
    if (exp->parsed()) {
      const auto base_code =
          concatenate(params_from_tuple(inner_t), params_from_tuple(outer_t));
      emit_params(out, opt, expurgate(base_code, amount));
      return ExitOk;
    }
    if (aud->parsed()) {
      std::ifstream in(tables_path);
      if (!in)
        parse_fail("cannot open '" + tables_path + "'");
      const auto rows = parse_table_rows(in);
      const auto report = audit_tables(rows);
      banner(out, opt);
      out << (opt.json ? audit_json_lines(report, allow_known)
                       : audit_text(report, allow_known));
      return report.unexpected(allow_known) == 0 ? ExitOk : ExitAuditFailed;
    }
    if (bnd->parsed()) {
      const auto family = parse_family(family_name);
      if (!family)
        parse_fail("unknown family '" + family_name + "'");
      std::vector<BoundCurve> curves;
      std::vector<FamilyParams> members;
      std::optional<std::pair<int, int>> range;
      if (*family == Family::GV) {
        members.push_back({Family::GV, 0, ce});
      } else if (!m_range.empty()) {
        range = parse_range(m_range);
        for (int m : valid_family_degrees(*family, range->first, range->second))
          members.push_back({*family, m, 0.0});
      } else if (m_opt->count() > 0) {
        members.push_back({*family, m_single, 0.0});
      } else {
        parse_fail("bounds needs --m or --m-range for family " + family_name);
      }
      if (members.empty())
        throw Error(ErrorKind::BadFamilyParams,
                    "no valid m in " + m_range + " for " + family_name);
      double top = 0.0;
      for (const auto &fp : members) {
        check_family_params(fp);
        top = std::max(top, family_delta_max(fp));
      }
      const auto grid = delta_grid(step, delta_max.value_or(top));
      for (const auto &fp : members)
        curves.push_back(sample_curve(fp, grid));
      if (range)
        curves.push_back(
            envelope_curve(*family, range->first, range->second, grid));
      const std::string csv = curves_csv(grid, curves);
      if (out_path.empty()) {
        out << csv;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
          throw Error(ErrorKind::DomainError, "cannot write '" + out_path + "'");
        f << csv;
        banner(out, opt);
        out << "wrote " << grid.size() << " rows, " << curves.size()
            << " curves to " << out_path << '\n';
      }
      return ExitOk;
    }
    if (gv->parsed()) {
      const auto v = parse_ints(spec_t, 6, "--spec");
      const auto s = EnsembleSpec::make(v[0], v[1], v[2], v[3], v[4], v[5]);
      const double x0 = gv_root_x0(s.rate(), s.ent_rate());
      const auto b = theorem2_probability_bound(s, delta);
      banner(out, opt);
      if (opt.json) {
        nlohmann::ordered_json j;
        j["spec"] = s.to_string();
        j["n_e"] = s.ne();
        j["r_e"] = s.re();
        j["c_e"] = s.ce();
        j["rate"] = s.rate();
        j["ent_rate"] = s.ent_rate();
        j["x0"] = x0;
        j["delta"] = delta;
        j["tau"] = b.tau;
        j["c"] = b.c;
        j["log2_bound"] = b.log2;
        out << j.dump() << '\n';
      } else {
        out << s.to_string() << '\n'
            << "n_e=" << s.ne() << " r_e=" << s.re() << " c_e=" << s.ce()
            << '\n'
            << "R_e=" << fmt_double(s.rate())
            << " C_e=" << fmt_double(s.ent_rate()) << '\n'
            << "x0=" << fmt_double(x0) << '\n'
            << "delta=" << fmt_double(delta) << " tau=" << fmt_double(b.tau)
            << " c=" << fmt_double(b.c) << '\n'
            << "log2_bound=" << fmt_double(b.log2) << '\n';
      }
      return ExitOk;
    }
    if (md->parsed()) {
      const auto code = read_code_file(code_path, kind);
      const Distance d = min_distance(code, budget);
      banner(out, opt);
      if (opt.json) {
        nlohmann::ordered_json j;
        j["n"] = code.length();
        j["k"] = code.dimension();
        j["q"] = code.field()->size();
        if (d.known())
          j["d"] = d.value;
        else
          j["d"] = nullptr;
        j["kind"] = d.known() ? "exact" : "unknown";
        out << j.dump() << '\n';
      } else if (d.known()) {
        out << "d=" << d.value << " exact\n";
      } else {
        out << "d=unknown (budget exceeded)\n";
      }
      return ExitOk;
    }
    if (ens->parsed()) {
      const auto stats = ensemble_exhaustive(ens_field, ens_n, ens_k);
      banner(out, opt);
      out << syndrome_report(stats);
      return stats.identities_hold ? ExitOk : ExitAuditFailed;
    }
    return ExitParse;
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitOk;
  } catch (const CLI::CallForVersion &) {
    out << "eacqc " << version << '\n';
    return ExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return ExitParse;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? ExitParse : ExitDomain;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return ExitDomain;
  }
}

} // namespace eacqc
