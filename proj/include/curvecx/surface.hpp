#pragma once
#include <map>
#include <string>
#include <vector>

#include "word.hpp"

namespace curvecx {

// ribbon graph input: named darts, cyclic dart orders around vertices, pairing
struct RibbonData {
  std::vector<std::string> darts;
  std::vector<std::vector<std::string>> vertex_cycles;
  std::map<std::string, std::string> pairing;
};

// punctured surface carried by a one-vertex ribbon spine; multi-vertex input
// is contracted along a canonical spanning tree first
class PuncturedSurface {
 public:
  static PuncturedSurface build(const RibbonData& in);
  static PuncturedSurface catalog(const std::string& name);
  // convenience: single vertex, darts named a,b,..,A,B,.. in the given cyclic order
  static PuncturedSurface one_vertex(const std::vector<std::string>& order_names);
  static PuncturedSurface from_json(const std::string& text);
  static PuncturedSurface load(const std::string& catalog_name_or_path);

  int genus = 0;
  int punctures = 0;  // m >= 1
  int xi = 0;         // 3g - 3 + m
  int rank = 0;       // free rank of the spine group

  // one-vertex cyclic order as signed letters
  const Word& order() const { return order_; }
  int position(Letter x) const;
  // boundary words as traced, one per puncture
  const std::vector<Word>& peripherals() const { return peripherals_; }
  // their canonical cyclic forms
  const std::vector<Word>& peripheral_classes() const { return peripheral_cls_; }
  bool is_peripheral_class(const Word& canonical) const;

  // original dart names backing generator k (positive dart first)
  const std::vector<std::pair<std::string, std::string>>& generator_darts() const {
    return gen_darts_;
  }
  const RibbonData& input() const { return input_; }

  Word parse(const std::string& s) const { return parse_word(s, rank); }
  std::string print(const Word& w) const { return print_word(w); }
  std::string to_json() const;  // input plus derived fields, deterministic

 private:
  RibbonData input_;
  Word order_;
  std::vector<int> pos_;  // positions indexed by letter
  std::vector<Word> peripherals_;
  std::vector<Word> peripheral_cls_;
  std::vector<std::pair<std::string, std::string>> gen_darts_;
};

}  // namespace curvecx
