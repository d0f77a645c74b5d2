#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "parenbraid/dyadic.hpp"
#include "parenbraid/trees.hpp"
#include "parenbraid/words.hpp"

namespace parenbraid {

struct Crossing {
  std::size_t row;
  std::size_t over;   // strand ids
  std::size_t under;
};

// Strand k starts at the k-th position of the input tree; x[r][k] is its dyadic abscissa
// before letter r, and x[w.size()][k] its final abscissa.
struct DiagramLayout {
  Word word;
  std::vector<Tree> trees;  // trees[r] is the tree before letter r; one extra for the output
  std::vector<std::vector<Dyadic>> x;
  std::vector<Crossing> crossings;
};

// Throws PartialityError naming the first letter that cannot act.
DiagramLayout layout_diagram(const Tree& t, const Word& w);

enum class DiagramFormat { svg, ascii };

std::string render_svg(const DiagramLayout& layout);
std::string render_ascii(const DiagramLayout& layout);
std::string render_diagram(const Tree& t, const Word& w, DiagramFormat format);

// Writes to a sibling temporary file, then renames it over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view bytes);

}  // namespace parenbraid
