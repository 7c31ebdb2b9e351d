#pragma once

#include <cstddef>

namespace slogan::annotate::data {

// Space-separated word lists keyed by PTB tag. When a word is listed under
// several tags the earliest block wins.
struct LexiconBlock {
  const char* tag;
  const char* words;
};

extern const LexiconBlock kLexicon[];
extern const std::size_t kLexiconBlocks;

}  // namespace slogan::annotate::data
