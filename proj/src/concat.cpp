/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/concat.hpp"
#include "eacqc/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace eacqc {

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::int64_t exp) {
  std::uint64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    r *= base;
  }
  return r;
}

bool is_expurgation_inner(const EaqeccParams &p) {
  return p.q == 2 && p.n == 4 && p.k == 2 && p.c == 0 && p.d.known() &&
         p.d.value == 2;
}

} // namespace

EaqeccParams concatenate(const EaqeccParams &inner, const EaqeccParams &outer) {
  const auto needed = checked_pow(inner.q, inner.k);
  if (!needed || *needed != outer.q)
    throw Error(ErrorKind::AlphabetMismatch,
                "outer alphabet " + std::to_string(outer.q) + " but inner " +
                    format(inner) + " needs " + std::to_string(inner.q) + "^" +
                    std::to_string(inner.k));
  EaqeccParams out;
  out.q = inner.q;
  out.n = inner.n * outer.n;
  out.k = inner.k * outer.k;
  out.c = inner.c * outer.n + outer.c * inner.k;
  if (inner.d.known() && outer.d.known())
    out.d = Distance::lower_bound(inner.d.value * outer.d.value);
  out.provenance = Provenance::Concatenation;
  out.source = std::make_shared<const ConcatSource>(ConcatSource{inner, outer, 0});
  out.validate();
  return out;
}

bool maximal_entanglement_closure_check(const EaqeccParams &inner,
                                        const EaqeccParams &outer,
                                        const EaqeccParams &out) {
  if (!inner.maximal() || !outer.maximal())
    return true;
  return out.c == inner.n * outer.n - inner.k * outer.k && out.maximal();
}

EaqeccParams extend(const EaqeccParams &p, std::int64_t t) {
  if (t < 0)
    throw Error(ErrorKind::InvalidParams, "extension by a negative amount");
  EaqeccParams out = p;
  out.n += t;
  out.extended += t;
  return out;
}

EaqeccParams expurgate(const EaqeccParams &p, std::int64_t t) {
  if (p.provenance != Provenance::Concatenation || !p.source ||
      !is_expurgation_inner(p.source->inner))
    throw Error(ErrorKind::ProvenanceMismatch,
                "expurgation needs a concatenation with inner [[4,2,2;0]]_2");
  if (t < 1)
    throw Error(ErrorKind::InvalidParams, "expurgation needs t >= 1");
  const ConcatSource &src = *p.source;
  if (src.expurgated + t > src.outer.n)
    throw Error(ErrorKind::TooManyBlocks,
                std::to_string(src.expurgated + t) + " blocks replaced, only " +
                    std::to_string(src.outer.n) + " available");
  EaqeccParams out = p;
  out.n -= t;
  out.c += t;
  out.source = std::make_shared<const ConcatSource>(
      ConcatSource{src.inner, src.outer, src.expurgated + t});
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

template <typename T> T parse_int(const std::string &s, const char *what) {
  T v{};
  const auto *end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw Error(ErrorKind::ParseError,
                std::string("bad ") + what + " '" + s + "'");
  return v;
}

} // namespace

std::string TableTuple::to_string() const {
  std::string s = std::to_string(n) + "," + std::to_string(k) + "," +
                  std::to_string(d) + "," + (c ? std::to_string(*c) : "-") +
                  "," + std::to_string(q);
  if (net)
    s += ",1";
  return s;
}

TableTuple parse_tuple(const std::string &text) {
  const auto f = split(text, ',');
  if (f.size() != 5 && f.size() != 6)
    throw Error(ErrorKind::ParseError,
                "tuple '" + text + "' needs n,k,d,c,q[,net]");
  TableTuple t;
  t.n = parse_int<std::int64_t>(f[0], "n");
  t.k = parse_int<std::int64_t>(f[1], "k");
  t.d = parse_int<std::int64_t>(f[2], "d");
  t.q = parse_int<std::uint64_t>(f[4], "q");
  if (f.size() == 6) {
    if (f[5] != "0" && f[5] != "1")
      throw Error(ErrorKind::ParseError, "net flag '" + f[5] + "' not 0 or 1");
    t.net = f[5] == "1";
  }
  if (f[3] == "-") {
    if (!t.net)
      throw Error(ErrorKind::ParseError,
                  "tuple '" + text + "': c may be '-' only with the net flag");
  } else {
    t.c = parse_int<std::int64_t>(f[3], "c");
  }
  return t;
}

std::vector<TableRow> parse_table_rows(std::istream &in) {
  std::vector<TableRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    try {
      const auto f = split(t, '|');
      if (f.size() != 6)
        throw Error(ErrorKind::ParseError, "expected 6 '|'-separated fields");
      TableRow row;
      row.table = f[0];
      row.line = lineno;
      if (row.table.empty())
        throw Error(ErrorKind::ParseError, "empty table id");
      row.inner = parse_tuple(f[1]);
      row.outer = parse_tuple(f[2]);
      const std::string &tr = f[3];
      if (tr == "base") {
        row.transform = TransformKind::Base;
      } else if (tr.rfind("ext+", 0) == 0) {
        row.transform = TransformKind::Extension;
        row.amount = parse_int<std::int64_t>(tr.substr(4), "extension");
      } else if (tr.rfind("exp-", 0) == 0) {
        row.transform = TransformKind::Expurgation;
        row.amount = parse_int<std::int64_t>(tr.substr(4), "expurgation");
      } else {
        throw Error(ErrorKind::ParseError, "unknown transform '" + tr + "'");
      }
      row.published = parse_tuple(f[4]);
      row.comparators = f[5];
      rows.push_back(std::move(row));
    } catch (const Error &e) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Audit
// ---------------------------------------------------------------------------

namespace {

struct KnownIssue {
  const char *table;
  const char *inner;
  const char *outer;
  const char *field;
  std::int64_t expected;
  std::int64_t published;
};

// Published entanglement disagrees with both the concatenation formula and
// the table's own c = n - k column definition.
constexpr KnownIssue known_issues[] = {
    {"IV", "23,2,18,21,2", "2,1,2,1,4", "c", 44, 34},
};

bool is_known(const TableRow &row, const FieldMismatch &m) {
  return std::any_of(std::begin(known_issues), std::end(known_issues),
                     [&](const KnownIssue &k) {
                       return row.table == k.table &&
                              row.inner.to_string() == k.inner &&
                              row.outer.to_string() == k.outer &&
                              m.field == k.field && m.expected == k.expected &&
                              m.published == k.published;
                     });
}

EaqeccParams literal_from(const TableTuple &t, std::int64_t c) {
  return EaqeccParams::literal(t.q, t.n, t.net ? t.k + c : t.k,
                               Distance::lower_bound(t.d), c);
}

EaqeccParams derive(const TableRow &row, std::int64_t outer_c) {
  if (row.inner.net || !row.inner.c)
    throw Error(ErrorKind::InvalidParams, "inner tuple needs an explicit c");
  const EaqeccParams inner = literal_from(row.inner, *row.inner.c);
  const EaqeccParams outer = literal_from(row.outer, outer_c);
  const EaqeccParams base = concatenate(inner, outer);
  switch (row.transform) {
  case TransformKind::Base:
    return base;
  case TransformKind::Extension:
    return extend(base, row.amount);
  case TransformKind::Expurgation:
    return expurgate(base, row.amount);
  }
  return base;
}

std::string format_net(const EaqeccParams &p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.net()) + "*," +
         format(p.d) + "]]_" + std::to_string(p.q);
}

void compare(RowVerdict &v, const char *field, std::int64_t expected,
             std::int64_t published) {
  if (expected != published)
    v.mismatches.push_back({field, expected, published});
}

RowVerdict audit_row(const TableRow &row, std::size_t index) {
  RowVerdict v;
  v.index = index;
  v.row = &row;
  try {
    // An outer tuple given by its net transmission leaves c2 free in
    // [0, (n2 - k2*) / 2]; every admissible c2 must derive the same row.
    std::vector<std::int64_t> candidates;
    if (row.outer.net && !row.outer.c) {
      for (std::int64_t c2 = 0; 2 * c2 <= row.outer.n - row.outer.k; ++c2)
        candidates.push_back(c2);
    } else {
      candidates.push_back(row.outer.c.value_or(0));
    }
    if (candidates.empty())
      throw Error(ErrorKind::InvalidParams, "no admissible outer c");

    std::vector<EaqeccParams> derived;
    for (auto c2 : candidates)
      derived.push_back(derive(row, c2));

    const TableTuple &pub = row.published;
    const EaqeccParams &d0 = derived.front();
    for (const auto &d : derived)
      if (d.n != d0.n || d.d != d0.d || d.q != d0.q ||
          (pub.net ? d.net() != d0.net() : (d.k != d0.k || d.c != d0.c)))
        throw Error(ErrorKind::InvalidParams,
                    "derived row depends on the unspecified outer c");

    v.derived = pub.net ? format_net(d0) : format(d0);
    compare(v, "q", static_cast<std::int64_t>(d0.q),
            static_cast<std::int64_t>(pub.q));
    compare(v, "n", d0.n, pub.n);
    if (pub.net) {
      compare(v, "net", d0.net(), pub.k);
      if (pub.c)
        compare(v, "c", d0.c, *pub.c);
    } else {
      compare(v, "k", d0.k, pub.k);
      if (pub.c)
        compare(v, "c", d0.c, *pub.c);
    }
    compare(v, "d", d0.d.value, pub.d);
  } catch (const Error &e) {
    v.error = e.what();
  }
  v.known_issue = !v.mismatches.empty() && v.error.empty() &&
                  std::all_of(v.mismatches.begin(), v.mismatches.end(),
                              [&](const FieldMismatch &m) {
                                return is_known(row, m);
                              });
  return v;
}

std::string transform_name(const TableRow &row) {
  switch (row.transform) {
  case TransformKind::Base:
    return "base";
  case TransformKind::Extension:
    return "ext+" + std::to_string(row.amount);
  case TransformKind::Expurgation:
    return "exp-" + std::to_string(row.amount);
  }
  return "?";
}

} // namespace

AuditReport audit_tables(const std::vector<TableRow> &rows) {
  AuditReport report;
  report.verdicts.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RowVerdict v = audit_row(rows[i], i);
    if (v.consistent())
      ++report.consistent;
    else
      ++report.mismatched;
    if (v.known_issue)
      ++report.known_issues;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

std::string audit_text(const AuditReport &report, bool allow_known) {
  std::ostringstream os;
  for (const auto &v : report.verdicts) {
    const TableRow &row = *v.row;
    os << row.table << ":" << row.line << " " << transform_name(row) << " ";
    if (!v.error.empty()) {
      os << "ERROR " << v.error << "\n";
      continue;
    }
    os << v.derived;
    if (v.consistent()) {
      os << " ok\n";
      continue;
    }
    os << " MISMATCH";
    for (const auto &m : v.mismatches)
      os << " " << m.field << " expected=" << m.expected
         << " published=" << m.published;
    if (v.known_issue)
      os << (allow_known ? " (known issue, allowed)" : " (known issue)");
    os << "\n";
  }
  os << "rows=" << report.verdicts.size()
     << ", consistent=" << report.consistent
     << ", mismatches=" << report.mismatched
     << ", known_issues=" << report.known_issues << "\n";
  return os.str();
}

std::string audit_json_lines(const AuditReport &report, bool allow_known) {
  std::ostringstream os;
  for (const auto &v : report.verdicts) {
    const TableRow &row = *v.row;
    nlohmann::ordered_json j;
    j["table"] = row.table;
    j["line"] = row.line;
    j["inner"] = row.inner.to_string();
    j["outer"] = row.outer.to_string();
    j["transform"] = transform_name(row);
    j["published"] = row.published.to_string();
    j["derived"] = v.derived;
    j["status"] = v.consistent()    ? "consistent"
                  : v.known_issue   ? "known_issue"
                  : v.error.empty() ? "mismatch"
                                    : "error";
    auto &ms = j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto &m : v.mismatches)
      ms.push_back({{"field", m.field},
                    {"expected", m.expected},
                    {"published", m.published}});
    if (!v.error.empty())
      j["error"] = v.error;
    os << j.dump() << "\n";
  }
  nlohmann::ordered_json s;
  s["rows"] = report.verdicts.size();
  s["consistent"] = report.consistent;
  s["mismatches"] = report.mismatched;
  s["known_issues"] = report.known_issues;
  s["unexpected"] = report.unexpected(allow_known);
  os << nlohmann::ordered_json{{"summary", s}}.dump() << "\n";
  return os.str();
}

} // namespace eacqc
