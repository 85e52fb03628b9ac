// Copyright 2026 The huckel-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HUCKEL_GRAPH6_HPP_
#define HUCKEL_GRAPH6_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "huckel/graph.hpp"

namespace huckel {

// graph6 record layout: size prefix, then the upper triangle read column by
// column (x[0,1], x[0,2], x[1,2], x[0,3], ...), six bits per byte,
// big-endian within the byte, each byte offset by 63.

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t position, const std::string& what)
      : std::runtime_error("graph6: " + what + " at position " +
                           std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kGraph6MaxOrder = 258047;

namespace graph6_detail {

inline std::size_t body_bytes(std::size_t n) {
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace graph6_detail

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::size_t offset = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    offset = kGraph6Header.size();
  }
  if (text.empty()) throw Graph6Error(offset, "empty record");
  if (text.front() == ':') {
    throw Graph6Error(offset, "sparse6 records are not supported");
  }
  if (text.front() == '&') {
    throw Graph6Error(offset, "digraph6 (directed) records are not accepted");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error(offset + i, "character code " + std::to_string(c) +
                                        " outside [63,126]");
    }
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      throw Graph6Error(offset + 1,
                        "extra-long size header (n >= 258048) is not supported");
    }
    if (text.size() < 4) {
      throw Graph6Error(offset + text.size(), "truncated long size header");
    }
    for (std::size_t i = 1; i <= 3; ++i) {
      n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    }
    pos = 4;
  }

  const std::size_t expected = graph6_detail::body_bytes(n);
  const std::size_t actual = text.size() - pos;
  if (actual != expected) {
    throw Graph6Error(offset + pos + std::min(actual, expected),
                      "body has " + std::to_string(actual) +
                          " bytes, order " + std::to_string(n) + " needs " +
                          std::to_string(expected));
  }

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const auto last = static_cast<unsigned>(text.back() - 63);
    const unsigned pad_mask = (1U << (6 - k % 6)) - 1;
    if ((last & pad_mask) != 0) {
      throw Graph6Error(offset + text.size() - 1, "non-zero padding bits");
    }
  }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw std::invalid_argument("write_graph6: order " + std::to_string(n) +
                                " exceeds the long-form limit");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  }
  return out;
}

}  // namespace huckel

#endif  // HUCKEL_GRAPH6_HPP_
