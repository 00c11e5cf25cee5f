#ifndef SYMCOH_H
#define SYMCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SymcohStatus {
  SYMCOH_STATUS_OK = 0,
  SYMCOH_STATUS_NULL_POINTER = 1,
  SYMCOH_STATUS_INVALID_ARGUMENT = 2,
  SYMCOH_STATUS_INVALID_GROUP = 3,
  SYMCOH_STATUS_INVALID_MODULE = 4,
  SYMCOH_STATUS_RESOURCE_GUARD = 5,
  /**
   * A value does not fit the caller's integer type or buffer.
   */
  SYMCOH_STATUS_OVERFLOW = 6,
  /**
   * The catalog or one of its instances could not be processed.
   */
  SYMCOH_STATUS_CATALOG_ERROR = 7,
  SYMCOH_STATUS_INTERNAL = 8,
} SymcohStatus;

/**
 * A computed `H^n` or `HS^n`.
 */
typedef struct SymcohCohomology SymcohCohomology;

/**
 * A finite group given by its multiplication table.
 */
typedef struct SymcohGroup SymcohGroup;

/**
 * A finitely generated module over a group.
 */
typedef struct SymcohModule SymcohModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. Valid until
 * the next call into the library on this thread.
 */
const char *symcoh_last_error(void);

/**
 * Library version, a static NUL-terminated string.
 */
const char *symcoh_version(void);

/**
 * Builtin group: `kind` is one of `trivial`, `cyclic`, `dihedral`,
 * `klein4`, `symmetric`; `n` is ignored where it does not apply.
 */
enum SymcohStatus symcoh_group_builtin(const char *kind, size_t n, struct SymcohGroup **out);

/**
 * Group from a row-major `order × order` table with identity 0.
 */
enum SymcohStatus symcoh_group_from_table(const size_t *table,
                                          size_t order,
                                          struct SymcohGroup **out);

size_t symcoh_group_order(const struct SymcohGroup *group);

void symcoh_group_free(struct SymcohGroup *group);

/**
 * Module `Z/d₁ ⊕ … ⊕ Z/d_k` (`d = 0` for `Z`). Generator `gens[i]` acts by
 * the row-major `k × k` matrix at `matrices + i·k·k`; the action is
 * completed by products. With `ngens = 0` the action is trivial.
 */
enum SymcohStatus symcoh_module_new(const struct SymcohGroup *group,
                                    const int64_t *relations,
                                    size_t k,
                                    const size_t *gens,
                                    const int64_t *matrices,
                                    size_t ngens,
                                    struct SymcohModule **out);

void symcoh_module_free(struct SymcohModule *module);

/**
 * `H^n(G, A)`, or `HS^n(G, A)` when `symmetric` is true.
 */
enum SymcohStatus symcoh_cohomology(const struct SymcohModule *module,
                                    size_t degree,
                                    bool symmetric,
                                    struct SymcohCohomology **out);

/**
 * Number of invariant factors (cyclic summands).
 */
size_t symcoh_cohomology_factor_count(const struct SymcohCohomology *c);

/**
 * Writes the invariant factors (`0` for a copy of `Z`) into `buf`.
 */
enum SymcohStatus symcoh_cohomology_factors(const struct SymcohCohomology *c,
                                            int64_t *buf,
                                            size_t len);

void symcoh_cohomology_free(struct SymcohCohomology *c);

/**
 * Invariant factors of the kernel of `HS^n → H^n`; `*count` receives the
 * number written (0 means injective).
 */
enum SymcohStatus symcoh_natural_map_kernel(const struct SymcohModule *module,
                                            size_t degree,
                                            int64_t *buf,
                                            size_t len,
                                            size_t *count);

/**
 * Runs every job of a catalog (axioms, section 2 checks, search) and
 * returns the JSON report in `*out`, to be released with
 * [`symcoh_string_free`].
 */
enum SymcohStatus symcoh_verify_catalog_json(const char *catalog, uint64_t seed, char **out);

void symcoh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMCOH_H */
