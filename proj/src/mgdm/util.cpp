#include "mgdm/util.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mgdm {

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep)) {
    size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(value);
  }
  return out;
}

std::string double_text(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::logic_error("number formatting failed");
  return std::string(buf, end);
}

}  // namespace mgdm
