#include "fcadi/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace fcadi {

namespace {

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& line, std::size_t lineno, const char* what) {
  std::string t = trim(line);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("line " + std::to_string(lineno) + ": expected " + std::string(what) +
                     " count, got '" + line + "'");
  }
  return std::stoull(t);
}

}  // namespace

FormalContext read_cxt(std::istream& in) {
  std::vector<std::string> lines = read_lines(in);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (at >= lines.size()) {
      throw InputError("line " + std::to_string(at + 1) + ": unexpected end of file, expected " +
                       std::string(what));
    }
    return lines[at++];
  };

  if (trim(need("'B' header")) != "B") throw InputError("line 1: expected 'B'");
  const std::string& after = need("name line or blank line");
  if (!is_blank(after)) {
    // Named context; the name is not part of the structure and is dropped.
    if (!is_blank(need("blank line after the name"))) {
      throw InputError("line " + std::to_string(at) + ": expected a blank line after the name");
    }
  }
  std::size_t nobj = parse_count(need("object"), at, "object");
  std::size_t nattr = parse_count(need("attribute"), at, "attribute");
  if (!is_blank(need("blank line before the name lists"))) {
    throw InputError("line " + std::to_string(at) + ": expected a blank line before the names");
  }

  std::vector<std::string> objs, attrs;
  for (std::size_t g = 0; g < nobj; ++g) objs.push_back(need("object name"));
  for (std::size_t m = 0; m < nattr; ++m) attrs.push_back(need("attribute name"));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < nobj; ++g) {
    std::size_t lineno = at + 1;
    const std::string& row = need("incidence row");
    if (row.size() != nattr) {
      throw InputError("line " + std::to_string(lineno) + ": row has " +
                       std::to_string(row.size()) + " cells, expected " + std::to_string(nattr));
    }
    for (std::size_t m = 0; m < nattr; ++m) {
      char c = row[m];
      if (c == 'X' || c == 'x') {
        pairs.emplace_back(g, m);
      } else if (c != '.') {
        throw InputError("line " + std::to_string(lineno) + ", column " + std::to_string(m + 1) +
                         ": expected 'X', 'x' or '.', got '" + std::string(1, c) + "'");
      }
    }
  }
  for (; at < lines.size(); ++at) {
    if (!is_blank(lines[at])) {
      throw InputError("line " + std::to_string(at + 1) + ": trailing content");
    }
  }
  return FormalContext(std::move(objs), std::move(attrs), pairs);
}

FormalContext read_csv(std::istream& in) {
  std::vector<std::string> lines = read_lines(in);
  std::size_t at = 0;
  while (at < lines.size() && is_blank(lines[at])) ++at;
  if (at >= lines.size()) throw InputError("empty csv input");

  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        cells.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    cells.push_back(trim(cur));
    return cells;
  };

  std::vector<std::string> header = split(lines[at]);
  std::size_t header_line = at + 1;
  ++at;
  std::vector<std::string> attrs(header.begin() + 1, header.end());

  std::vector<std::string> objs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (; at < lines.size(); ++at) {
    if (is_blank(lines[at])) continue;
    std::vector<std::string> cells = split(lines[at]);
    if (cells.size() != attrs.size() + 1) {
      throw InputError("line " + std::to_string(at + 1) + ": row has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(attrs.size() + 1));
    }
    std::size_t g = objs.size();
    objs.push_back(cells[0]);
    for (std::size_t m = 0; m < attrs.size(); ++m) {
      const std::string& v = cells[m + 1];
      if (v == "1" || v == "X" || v == "x") {
        pairs.emplace_back(g, m);
      } else if (!(v == "0" || v == "." || v.empty())) {
        throw InputError("line " + std::to_string(at + 1) + ", column " + std::to_string(m + 2) +
                         ": expected 1/0, X/x or '.', got '" + v + "'");
      }
    }
  }
  (void)header_line;
  return FormalContext(std::move(objs), std::move(attrs), pairs);
}

void write_cxt(std::ostream& out, const FormalContext& ctx) {
  out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
  for (const auto& g : ctx.objects) out << g << '\n';
  for (const auto& m : ctx.attributes) out << m << '\n';
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      out << (ctx.incident(g, m) ? 'X' : '.');
    }
    out << '\n';
  }
}

std::string to_cxt(const FormalContext& ctx) {
  std::ostringstream os;
  write_cxt(os, ctx);
  return os.str();
}

FormalContext read_context_file(const std::string& path, ContextFormat format) {
  if (format == ContextFormat::Auto) {
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".cxt") {
      format = ContextFormat::Cxt;
    } else if (ext == ".csv") {
      format = ContextFormat::Csv;
    } else {
      throw InputError("cannot infer format from '" + path + "' (expected .cxt or .csv)");
    }
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return format == ContextFormat::Cxt ? read_cxt(in) : read_csv(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace fcadi
