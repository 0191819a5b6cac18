#include "ellroot/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ellroot/arith.hpp"
#include "ellroot/error.hpp"

namespace ellroot {

namespace {

constexpr const char* kCoeffNames[5] = {"a1", "a2", "a3", "a4", "a6"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  raise(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

CoeffList parse_coeffs(const std::string& text, std::uint32_t p, int k, int line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    parse_error(line, "malformed coefficient list '" + text + "'");
  }
  if (!j.is_array()) parse_error(line, "coefficient list expected");
  auto residue = [&](const nlohmann::json& x) {
    if (!x.is_number_integer()) parse_error(line, "integer coefficient expected");
    const long long v = x.get<long long>();
    if (v < 0 || v >= static_cast<long long>(p)) parse_error(line, "coefficient out of range mod " + std::to_string(p));
    return static_cast<std::uint32_t>(v);
  };
  CoeffList out;
  for (const auto& c : j) {
    if (k == 1 && !c.is_array()) {
      out.push_back({residue(c)});
      continue;
    }
    if (!c.is_array() || static_cast<int>(c.size()) != k)
      parse_error(line, "each coefficient needs " + std::to_string(k) + " residues");
    std::vector<std::uint32_t> e;
    for (const auto& x : c) e.push_back(residue(x));
    out.push_back(std::move(e));
  }
  return out;
}

std::string emit_coeffs(const CoeffList& c, int k) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    if (k == 1) {
      s += std::to_string(c[i][0]);
      continue;
    }
    s += "[";
    for (std::size_t j = 0; j < c[i].size(); ++j) s += (j ? "," : "") + std::to_string(c[i][j]);
    s += "]";
  }
  return s + "]";
}

Poly to_poly(const FieldPtr& F, const CoeffList& c) {
  std::vector<Code> codes;
  for (const auto& e : c) codes.push_back(F->from_coeffs(e));
  return Poly(F, std::move(codes));
}

CoeffList from_poly(const Poly& f) {
  CoeffList out;
  for (Code c : f.coeffs()) out.push_back(f.field()->coeffs(c));
  return out;
}

void validate(const CurveRecord& r, int line) {
  if (r.p == 0) parse_error(line, "curve " + r.id + " has no field line");
  try {
    to_model(r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularCurve) raise(ErrorKind::SingularCurve, "curve " + r.id + " is singular");
    raise(e.kind(), "curve " + r.id + ": " + e.what());
  }
}

}  // namespace

std::vector<CurveRecord> parse_catalog(const std::string& text) {
  std::vector<CurveRecord> out;
  std::set<std::string> ids;
  std::istringstream in(text);
  std::string raw;
  int line = 0, start = 0;
  bool open = false;
  CurveRecord cur;
  auto close = [&]() {
    if (!open) return;
    validate(cur, start);
    out.push_back(std::move(cur));
    cur = CurveRecord{};
    open = false;
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    std::istringstream words(s);
    std::string head;
    words >> head;
    if (head == "curve") {
      close();
      words >> cur.id;
      std::string extra;
      if (cur.id.empty() || (words >> extra)) parse_error(line, "expected 'curve <id>'");
      if (!ids.insert(cur.id).second) parse_error(line, "duplicate curve id " + cur.id);
      open = true;
      start = line;
      continue;
    }
    if (!open) parse_error(line, "line outside a curve record");
    if (head == "field") {
      long long p = 0, k = 0;
      std::string extra;
      if (!(words >> p >> k) || (words >> extra) || p < 2 || k < 1 || !is_prime(static_cast<std::uint64_t>(p)))
        parse_error(line, "expected 'field <p> <k>'");
      cur.p = static_cast<std::uint32_t>(p);
      cur.k = static_cast<int>(k);
      continue;
    }
    if (head == "expect") {
      const auto eq = s.find('=');
      if (eq == std::string::npos) parse_error(line, "expected 'expect <key> = <value>'");
      const std::string key = trim(s.substr(6, eq - 6)), value = trim(s.substr(eq + 1));
      if (key.empty() || value.empty()) parse_error(line, "expected 'expect <key> = <value>'");
      cur.expect.emplace_back(key, value);
      continue;
    }
    const auto eq = s.find('=');
    const std::string name = trim(s.substr(0, eq));
    int slot = -1;
    for (int i = 0; i < 5; ++i)
      if (name == kCoeffNames[i]) slot = i;
    if (slot < 0 || eq == std::string::npos) parse_error(line, "unknown line '" + s + "'");
    if (cur.p == 0) parse_error(line, "field line must precede coefficients");
    cur.a[slot] = parse_coeffs(trim(s.substr(eq + 1)), cur.p, cur.k, line);
  }
  close();
  return out;
}

std::vector<CurveRecord> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::Parse, "cannot read catalog " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string emit_catalog(const std::vector<CurveRecord>& records) {
  std::string s;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CurveRecord& r = records[i];
    if (i) s += "\n";
    s += "curve " + r.id + "\n";
    s += "field " + std::to_string(r.p) + " " + std::to_string(r.k) + "\n";
    for (int j = 0; j < 5; ++j) s += std::string(kCoeffNames[j]) + " = " + emit_coeffs(r.a[j], r.k) + "\n";
    for (const auto& [key, value] : r.expect) s += "expect " + key + " = " + value + "\n";
  }
  return s;
}

WeierstrassModel to_model(const CurveRecord& r) {
  FieldPtr F = make_field(r.p, r.k);
  return WeierstrassModel(to_poly(F, r.a[0]), to_poly(F, r.a[1]), to_poly(F, r.a[2]), to_poly(F, r.a[3]),
                          to_poly(F, r.a[4]));
}

CurveRecord to_record(const std::string& id, const WeierstrassModel& E) {
  CurveRecord r;
  r.id = id;
  r.p = E.field()->p();
  r.k = E.field()->k();
  r.a = {from_poly(E.a1()), from_poly(E.a2()), from_poly(E.a3()), from_poly(E.a4()), from_poly(E.a6())};
  return r;
}

Poly parse_poly(const FieldPtr& F, const std::string& text) {
  return to_poly(F, parse_coeffs(text, F->p(), F->k(), 0));
}

}  // namespace ellroot
