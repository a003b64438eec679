#pragma once

#include <string>
#include <vector>

#include "qplab/variety.hpp"

namespace qplab {

/// Header of a `.ideal` / `.variety` file: `ring r=<r> char=<p>`.
struct RingHeader {
  int r = 0;
  FieldConfig field;
};

RingHeader read_ring_header(const std::string& text);

/// `.ideal` text: the ring line, then one generator per line.
template <class F>
Ideal<F> parse_ideal_text(const std::string& text, const F& field);

template <class F>
std::string format_ideal(const Ideal<F>& I, const std::vector<std::string>& comments = {});

/// `.variety` text: the `.ideal` block, then optional `param: s=<s>` block of
/// components, `source_ideal:` block, `totally_real:`, `param_rational:` and
/// `name:` lines.
template <class F>
Variety<F> parse_variety_text(const std::string& text, const F& field);

template <class F>
std::string format_variety(const Variety<F>& V, const std::vector<std::string>& comments = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qplab
