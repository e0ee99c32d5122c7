#pragma once

namespace sumfree {

/// Tag stored with every persisted search result. Bump whenever the search
/// semantics change so stale log entries stop being reused.
inline constexpr const char* kCodeVersion = "sumfree-1.0.0";

}  // namespace sumfree
