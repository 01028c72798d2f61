/*
 * mag - multiple exact pattern matching with q-gram filtering.
 *
 * C interface to the engine: compile a pattern set into an opaque engine
 * handle, feed it text, read back (pattern index, byte offset) matches.
 * All functions return MAG_OK on success; mag_last_error() carries a
 * human-readable detail message for the calling thread's last failure.
 */

#ifndef MAG_H
#define MAG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MAG_API __declspec(dllexport)
#else
#define MAG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mag_status {
  MAG_OK = 0,
  MAG_ERR_NULL_ARGUMENT = 1,
  MAG_ERR_INVALID_ARGUMENT = 2,
  MAG_ERR_EMPTY_PATTERN_SET = 3,
  MAG_ERR_EMPTY_PATTERN = 4,
  MAG_ERR_BAD_CONFIG = 5,
  MAG_ERR_OUT_OF_RANGE = 6,
  MAG_ERR_NO_MEMORY = 7,
  MAG_ERR_INTERNAL = 8
} mag_status;

typedef enum mag_variant {
  MAG_VARIANT_MAG = 0,        /* strided q-gram filter, on-the-fly encoding */
  MAG_VARIANT_SMAG = 1,       /* same filter over a pre-encoded text */
  MAG_VARIANT_SHIFTOR_OG = 2, /* plain Shift-Or over overlapping q-grams */
  MAG_VARIANT_NAIVE = 3,      /* brute-force reference */
  MAG_VARIANT_AC = 4          /* Aho-Corasick reference */
} mag_variant;

typedef enum mag_mapping {
  MAG_MAPPING_AUTO = -1,     /* balanced for small alphabets, else identity */
  MAG_MAPPING_IDENTITY = 0,
  MAG_MAPPING_FREQUENCY = 1,
  MAG_MAPPING_BALANCED = 2,
  MAG_MAPPING_LOWBITS = 3    /* requires lowbits in [1,8] */
} mag_mapping;

typedef struct mag_engine mag_engine;
typedef struct mag_prepared mag_prepared;
typedef struct mag_matches mag_matches;
typedef struct mag_patterns mag_patterns;

typedef struct mag_options {
  int variant;          /* mag_variant */
  int mapping;          /* mag_mapping */
  int lowbits;          /* bit count for MAG_MAPPING_LOWBITS */
  int q;                /* gram length, 0 = auto */
  int k;                /* stride, 0 = auto */
  int sigma_prime;      /* reduced alphabet size, 0 = auto */
  int threads;          /* <= 1: sequential scan */
  const uint8_t* histogram_sample;  /* optional text sample for the byte
                                       histogram (first 1 MiB is used) */
  size_t histogram_sample_len;
} mag_options;

/* Fill an options struct with defaults (mag variant, everything auto). */
MAG_API void mag_options_init(mag_options* opts);

/* Compile `count` patterns (arbitrary bytes, each non-empty) into an engine.
 * opts may be NULL for defaults. */
MAG_API mag_status mag_engine_create(const uint8_t* const* patterns,
                                     const size_t* pattern_lens, size_t count,
                                     const mag_options* opts, mag_engine** out);
MAG_API void mag_engine_destroy(mag_engine* engine);

typedef struct mag_engine_info {
  int variant;
  uint32_t r;           /* pattern count */
  size_t m;             /* effective (minimum) pattern length */
  int q;                /* 0 for oracle variants */
  int k;
  int sigma_prime;
  int mapping;          /* mag_mapping actually in effect */
} mag_engine_info;

MAG_API mag_status mag_engine_get_info(const mag_engine* engine, mag_engine_info* out);

/* Copy the 256-entry byte -> code table used by the filter. */
MAG_API mag_status mag_engine_copy_alphabet(const mag_engine* engine, uint8_t table[256],
                                            uint32_t* sigma_prime);

/* Variant-specific text preprocessing (for smag: whole-text gram encoding).
 * The text buffer must outlive the prepared handle and any searches on it. */
MAG_API mag_status mag_prepare_text(const mag_engine* engine, const uint8_t* text,
                                    size_t len, mag_prepared** out);
MAG_API void mag_prepared_destroy(mag_prepared* prepared);

MAG_API mag_status mag_search_prepared(const mag_engine* engine,
                                       const mag_prepared* prepared, mag_matches** out);

/* prepare + search in one call. */
MAG_API mag_status mag_search(const mag_engine* engine, const uint8_t* text, size_t len,
                              mag_matches** out);

MAG_API size_t mag_matches_count(const mag_matches* matches);
/* Matches are sorted by (offset, pattern_index) and duplicate-free. */
MAG_API mag_status mag_matches_get(const mag_matches* matches, size_t index,
                                   uint32_t* pattern_index, size_t* offset);

typedef struct mag_metrics {
  uint64_t filter_reads;
  uint64_t candidates;
} mag_metrics;

MAG_API mag_status mag_matches_metrics(const mag_matches* matches, mag_metrics* out);
MAG_API void mag_matches_destroy(mag_matches* matches);

/* Parameter selection from problem shape alone. */
typedef struct mag_tuning_input {
  uint32_t sigma;        /* observed distinct byte count */
  uint32_t sigma_prime;  /* 0 = pick by rule */
  uint64_t r;
  uint64_t m;
  uint64_t n;
  uint32_t word_bits;    /* 0 = 64 */
} mag_tuning_input;

typedef struct mag_tuning_result {
  int q;
  int k;
  int sigma_prime;
  double rho;
  double predicted_p;
  double predicted_cost;
} mag_tuning_result;

MAG_API mag_status mag_tune(const mag_tuning_input* input, mag_tuning_result* out);

/* Seeded pattern sampling: `count` substrings of length `length` at uniform
 * pseudo-random offsets of the corpus. */
MAG_API mag_status mag_sample_patterns(const uint8_t* corpus, size_t corpus_len,
                                       size_t count, size_t length, uint64_t seed,
                                       mag_patterns** out);
MAG_API size_t mag_patterns_count(const mag_patterns* patterns);
MAG_API mag_status mag_patterns_get(const mag_patterns* patterns, size_t index,
                                    const uint8_t** bytes, size_t* len);
MAG_API void mag_patterns_destroy(mag_patterns* patterns);

MAG_API const char* mag_status_string(mag_status status);
/* Detail message for this thread's most recent failure; never NULL. */
MAG_API const char* mag_last_error(void);
MAG_API const char* mag_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MAG_H */
