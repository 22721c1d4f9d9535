#pragma once

// Data manifests compiled into the library (generated from data/).
namespace sar::data {

extern const char kCatalogJson[];
extern const char kSnippetsJson[];
extern const char kLexiconJson[];

}  // namespace sar::data
