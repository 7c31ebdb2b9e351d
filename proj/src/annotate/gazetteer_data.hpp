#pragma once

#include <cstddef>

namespace slogan::annotate::data {

// '|'-separated entries; multi-word entries keep their internal spaces.
struct GazetteerBlock {
  const char* label;
  const char* entries;
};

extern const GazetteerBlock kGazetteer[];
extern const std::size_t kGazetteerBlocks;

// Given names that start a PERSON bigram. Names that double as ordinary
// English words (Grace, Hope, Will, May, ...) are left out.
extern const char* const kGivenNames;

}  // namespace slogan::annotate::data
