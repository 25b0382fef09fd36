#ifndef BJORTHO_IO_HPP
#define BJORTHO_IO_HPP

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bjortho/space.hpp"

namespace bjortho {

using ordered_json = nlohmann::ordered_json;

/// Malformed input document (bad JSON/CSV, missing fields, invalid values).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A measure space plus named functions on it.
struct InputDocument {
  MeasureSpace space;
  std::vector<std::pair<std::string, FunctionVec>> functions;

  const FunctionVec& function(const std::string& name) const {
    for (const auto& [n, f] : functions)
      if (n == name) return f;
    throw InputError("no function named '" + name + "'");
  }

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace detail {

inline void validate_document(const InputDocument& doc) {
  for (std::size_t i = 0; i < doc.functions.size(); ++i) {
    const auto& [name, f] = doc.functions[i];
    for (std::size_t j = 0; j < i; ++j)
      if (doc.functions[j].first == name) throw InputError("duplicate function name '" + name + "'");
    try {
      check_aligned(doc.space, f);
    } catch (const AlignmentError& e) {
      throw InputError("function '" + name + "': " + e.what());
    }
  }
}

inline double json_number(const ordered_json& j, const std::string& what) {
  if (!j.is_number()) throw InputError(what + ": expected a number");
  return j.get<double>();
}

inline std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

inline double parse_double(std::string_view s, const std::string& what) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InputError(what + ": '" + std::string(s) + "' is not a number");
  return x;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return cells;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline ordered_json scalar_to_json(const Scalar& z, Field field) {
  if (field == Field::Real) return z.real();
  return ordered_json::array({z.real(), z.imag()});
}

inline ordered_json function_to_json(const FunctionVec& f, Field field) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : f.values()) arr.push_back(scalar_to_json(z, field));
  return arr;
}

inline ordered_json to_json(const InputDocument& doc) {
  ordered_json j;
  j["field"] = doc.space.is_complex() ? "complex" : "real";
  j["atoms"] = ordered_json::array();
  for (const auto& a : doc.space.atoms()) j["atoms"].push_back({{"id", a.id}, {"weight", a.weight}});
  j["functions"] = ordered_json::object();
  for (const auto& [name, f] : doc.functions) j["functions"][name] = function_to_json(f, doc.space.field());
  return j;
}

inline InputDocument document_from_json(const ordered_json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (!j.contains("field") || !j["field"].is_string()) throw InputError("missing string field 'field'");
  const auto field_name = j["field"].get<std::string>();
  Field field;
  if (field_name == "real") field = Field::Real;
  else if (field_name == "complex") field = Field::Complex;
  else throw InputError("'field' must be \"real\" or \"complex\"");

  if (!j.contains("atoms") || !j["atoms"].is_array()) throw InputError("missing array 'atoms'");
  std::vector<Atom> atoms;
  for (const auto& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("id") || !a["id"].is_string() || !a.contains("weight"))
      throw InputError("each atom needs a string 'id' and a numeric 'weight'");
    atoms.push_back({a["id"].get<std::string>(), detail::json_number(a["weight"], "atom weight")});
  }
  std::optional<MeasureSpace> space;
  try {
    space.emplace(std::move(atoms), field);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  if (!j.contains("functions") || !j["functions"].is_object()) throw InputError("missing object 'functions'");
  InputDocument doc{*space, {}};
  for (const auto& [name, arr] : j["functions"].items()) {
    if (!arr.is_array()) throw InputError("function '" + name + "' must be an array");
    std::vector<Scalar> values;
    for (const auto& v : arr) {
      if (v.is_number()) {
        values.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        values.emplace_back(v[0].get<double>(), v[1].get<double>());
      } else {
        throw InputError("function '" + name + "': values must be numbers or [re, im] pairs");
      }
    }
    try {
      doc.functions.emplace_back(name, FunctionVec(std::move(values)));
    } catch (const AlignmentError& e) {
      throw InputError("function '" + name + "': " + e.what());
    }
  }
  detail::validate_document(doc);
  return doc;
}

inline InputDocument parse_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

/// CSV columns: atom_id, weight, then NAME_re and optionally NAME_im per
/// function. The space is complex iff some NAME_im column is present.
inline InputDocument parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = detail::trim(text.substr(start, end - start));
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw InputError("CSV: header row required");
  auto header = detail::split_csv_line(lines[0]);
  for (auto& h : header) h = detail::trim(h);
  if (header.size() < 2 || header[0] != "atom_id" || header[1] != "weight")
    throw InputError("CSV: header must start with atom_id,weight");

  struct Column {
    std::string name;
    std::size_t re = 0, im = 0;
    bool has_im = false;
  };
  std::vector<Column> cols;
  auto find_col = [&](const std::string& name) -> Column& {
    for (auto& c : cols)
      if (c.name == name) return c;
    cols.push_back({name});
    return cols.back();
  };
  for (std::size_t k = 2; k < header.size(); ++k) {
    const std::string h(header[k]);
    if (h.size() > 3 && h.ends_with("_re")) {
      auto& c = find_col(h.substr(0, h.size() - 3));
      c.re = k;
    } else if (h.size() > 3 && h.ends_with("_im")) {
      auto& c = find_col(h.substr(0, h.size() - 3));
      c.im = k;
      c.has_im = true;
    } else {
      throw InputError("CSV: column '" + h + "' must end in _re or _im");
    }
  }
  for (const auto& c : cols)
    if (c.re == 0) throw InputError("CSV: function '" + c.name + "' has no _re column");
  const bool complex = std::any_of(cols.begin(), cols.end(), [](const Column& c) { return c.has_im; });

  std::vector<Atom> atoms;
  std::vector<std::vector<Scalar>> values(cols.size());
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto cells = detail::split_csv_line(lines[r]);
    if (cells.size() != header.size())
      throw InputError("CSV: row " + std::to_string(r) + " has " + std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(header.size()));
    atoms.push_back({std::string(detail::trim(cells[0])), detail::parse_double(cells[1], "CSV weight")});
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const double re = detail::parse_double(cells[cols[c].re], "CSV " + cols[c].name + "_re");
      const double im = cols[c].has_im ? detail::parse_double(cells[cols[c].im], "CSV " + cols[c].name + "_im") : 0.0;
      values[c].emplace_back(re, im);
    }
  }
  std::optional<MeasureSpace> space;
  try {
    space.emplace(std::move(atoms), complex ? Field::Complex : Field::Real);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  InputDocument doc{*space, {}};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    try {
      doc.functions.emplace_back(cols[c].name, FunctionVec(std::move(values[c])));
    } catch (const AlignmentError& e) {
      throw InputError("function '" + cols[c].name + "': " + e.what());
    }
  }
  detail::validate_document(doc);
  return doc;
}

inline std::string to_csv(const InputDocument& doc) {
  std::ostringstream out;
  out << "atom_id,weight";
  for (const auto& [name, f] : doc.functions) {
    out << ',' << name << "_re";
    if (doc.space.is_complex()) out << ',' << name << "_im";
  }
  out << '\n';
  for (std::size_t i = 0; i < doc.space.size(); ++i) {
    out << doc.space.atoms()[i].id << ',' << detail::format_double(doc.space.weight(i));
    for (const auto& [name, f] : doc.functions) {
      out << ',' << detail::format_double(f[i].real());
      if (doc.space.is_complex()) out << ',' << detail::format_double(f[i].imag());
    }
    out << '\n';
  }
  return out.str();
}

/// JSON if the first non-blank character is '{', CSV otherwise.
inline InputDocument parse_input(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_json(text);
  return parse_csv(text);
}

}  // namespace bjortho

#endif  // BJORTHO_IO_HPP
