#pragma once

namespace domset::mem_audit {

// Live-object accounting for VertexSet instances. The enumeration engine
// promises polynomial working space; tests watch the peak while a stream is
// drained to confirm nothing solution-proportional is retained.
void on_create();
void on_destroy();
long long live();
long long peak();
void reset_peak();

} // namespace domset::mem_audit
