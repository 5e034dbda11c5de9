#include "wexc/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace wexc {

namespace {

using ojson = nlohmann::ordered_json;

ojson big_number(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return ojson(v.get_si());
  return ojson(v.get_str());
}

ojson vector_json(std::span<const std::uint32_t> v) {
  ojson arr = ojson::array();
  for (auto x : v) arr.push_back(x);
  return arr;
}

std::string join_factored(const std::vector<TableEntry>& entries) {
  std::string s;
  for (const auto& e : entries) {
    if (!s.empty()) s += ", ";
    s += e.factorization.to_string();
  }
  return s;
}

[[noreturn]] void malformed(const std::string& what) { throw GroupError(GroupErrorKind::Malformed, what); }

std::uint64_t as_residue(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) malformed(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

DiagonalGroup parse_group_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("group file must be a JSON object");
  for (const char* key : {"q", "m", "generators"})
    if (!doc.contains(key)) malformed(std::string("group file lacks field '") + key + "'");

  DiagonalGroup d;
  const std::uint64_t q = as_residue(doc["q"], "q");
  if (q > 1'000'000) malformed("q is unreasonably large");
  d.q = static_cast<std::uint32_t>(q);
  d.m = as_residue(doc["m"], "m");
  const auto& gens = doc["generators"];
  if (!gens.is_array()) malformed("generators must be a list");
  for (const auto& g : gens) {
    if (!g.is_array()) malformed("each generator must be a list of integers");
    ExponentVector beta;
    for (const auto& x : g) beta.push_back(as_residue(x, "generator entry"));
    d.generators.push_back(std::move(beta));
  }
  return d;
}

DiagonalGroup read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open group file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str());
}

std::string table_to_json(const ClassificationTable& table) {
  ojson doc;
  doc["q"] = table.q;
  ojson rows = ojson::object();
  for (const auto& [d, entries] : table.rows) {
    ojson row = ojson::array();
    for (const auto& e : entries) {
      ojson entry;
      entry["n"] = e.n.get_str();
      ojson factors = ojson::array();
      for (const auto& pp : e.factorization.pairs) factors.push_back(ojson::array({big_number(pp.prime), pp.exponent}));
      entry["factors"] = std::move(factors);
      entry["witness"] = vector_json(e.witness.exponents());
      row.push_back(std::move(entry));
    }
    rows[std::to_string(d)] = std::move(row);
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

std::string table_to_text(const ClassificationTable& table) {
  std::ostringstream os;
  os << "q = " << table.q << ": D is contained in C_" << table.q << " x (C_(n*d))^" << (table.q - 1)
     << " for one of\n";
  for (const auto& [d, entries] : table.rows) {
    os << "d=" << d << "  ";
    if (entries.size() == 1) {
      os << "n = " << entries.front().factorization.to_string();
    } else {
      os << "n is one of " << join_factored(entries);
    }
    os << '\n';
  }
  return os.str();
}

std::string group_error_to_json(const GroupError& e) {
  ojson doc;
  doc["error"] = to_string(e.kind());
  doc["message"] = e.what();
  if (e.generator_index()) doc["generator"] = *e.generator_index();
  if (e.witness()) doc["witness"] = *e.witness();
  return doc.dump();
}

std::string verdict_to_json(const MonomialGroup& g, const Verdict& v) {
  ojson doc;
  doc["q"] = g.q();
  doc["m"] = g.m();
  doc["verdict"] = v.weakly_exceptional ? "WeaklyExceptional" : "NotWeaklyExceptional";
  doc["diagonal_order"] = v.diagonal_order.get_str();
  doc["group_order"] = v.group_order.get_str();
  doc["supergroup_index_factor"] = v.supergroup_index_factor.get_str();
  doc["supergroup_order_bound"] = v.supergroup_order_bound.get_str();
  if (v.witness) {
    ojson w;
    w["degree"] = v.witness->degree;
    w["composition"] = vector_json(v.witness->composition.exponents());
    ojson chars = ojson::array();
    for (auto c : v.witness->character) chars.push_back(c);
    w["character"] = std::move(chars);
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  return doc.dump();
}

std::string verdict_to_text(const MonomialGroup& g, const Verdict& v) {
  std::ostringstream os;
  os << "group: q=" << g.q() << " m=" << g.m() << " |D|=" << v.diagonal_order.get_str()
     << " |G|=" << v.group_order.get_str() << '\n';
  if (v.weakly_exceptional) {
    os << "verdict: WeaklyExceptional (no semi-invariant of degree < " << g.q() << ")\n";
  } else {
    const auto& w = *v.witness;
    os << "verdict: NotWeaklyExceptional\n"
       << "witness: degree " << w.degree << ", monomial exponents " << w.composition.to_string()
       << ", orbit sum x^a + l*tau(x^a) + ... with l^" << g.q() << " = 1\n";
  }
  os << "any monomial supergroup Gamma with G as its D x| C_q part has |Gamma| <= "
     << v.supergroup_index_factor.get_str() << " * |G| = " << v.supergroup_order_bound.get_str() << '\n';
  return os.str();
}

std::string scan_to_text(const ScanReport& r) {
  std::ostringstream os;
  os << "q=" << r.q << " rows checked: " << r.rows_checked << '\n'
     << "zero determinants: " << r.zero_determinants << '\n'
     << "min |det|: " << r.min_abs_det.get_str() << '\n'
     << "max |det|: " << r.max_abs_det.get_str() << '\n';
  for (const auto& row : r.zero_rows) {
    os << "  zero row:";
    for (auto a : row) os << ' ' << a;
    os << '\n';
  }
  if (r.bound_violations) os << "rows above (sum a_i)^q: " << r.bound_violations << '\n';
  os << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string bound_report_to_text(const BoundReport& r) {
  std::ostringstream os;
  os << "q^(2q+1) = " << r.cycle_bound.get_str() << '\n'
     << "q^(2q+2) = " << r.cyclic_subgroup_bound.get_str() << '\n'
     << "(q-1)!   = " << r.supergroup_index_factor.get_str() << '\n'
     << "entries checked: " << r.entries_checked << '\n';
  for (const auto& v : r.violations) os << "  violation: " << v << '\n';
  os << (r.ok() ? "bounds hold" : "BOUND VIOLATIONS") << '\n';
  return os.str();
}

}  // namespace wexc
