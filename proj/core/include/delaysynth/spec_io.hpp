#pragma once

#include <string>

#include "delaysynth/transducer.hpp"
#include "delaysynth/words.hpp"

namespace ds {

/// Parse the line-based spec format:
///   input a b c
///   output b c
///   state NAME PRIORITY
///   initial NAME
///   trans FROM INWORD OUTWORD TO     ("-" denotes the empty word)
/// '#' starts a comment. Symbols are single characters.
Transducer parseSpec(const std::string& text);
Transducer parseSpecFile(const std::string& path);

std::string emitSpec(const Transducer& t);
void emitSpecFile(const Transducer& t, const std::string& path);

/// "prefix|period"; empty prefix allowed, empty period rejected.
Lasso parseLasso(const std::string& text);

}  // namespace ds
