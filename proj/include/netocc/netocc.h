#ifndef NETOCC_NETOCC_H_
#define NETOCC_NETOCC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(NETOCC_BUILDING_LIBRARY)
#define NETOCC_API __attribute__((visibility("default")))
#else
#define NETOCC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum netocc_status {
  NETOCC_OK = 0,
  NETOCC_ERR_DOMAIN = 1,            /* argument outside the mathematical domain */
  NETOCC_ERR_INVALID_ARGUMENT = 2,  /* null pointer, bad enum, malformed input */
  NETOCC_ERR_IO = 3,
  NETOCC_ERR_INTERNAL = 4,
} netocc_status;

typedef enum netocc_engine {
  NETOCC_ENGINE_ORACLE = 0,
  NETOCC_ENGINE_INDEXED = 1,
} netocc_engine;

typedef enum netocc_family {
  NETOCC_FAMILY_FIBONACCI = 0,
  NETOCC_FAMILY_THUE_MORSE = 1,
} netocc_family;

/* 1-based, inclusive. */
typedef struct netocc_span {
  size_t start;
  size_t end;
} netocc_span;

typedef struct netocc_word netocc_word;
typedef struct netocc_result netocc_result;

NETOCC_API const char* netocc_version(void);

/* Message for the last non-OK status returned on this thread. */
NETOCC_API const char* netocc_last_error(void);

NETOCC_API netocc_status netocc_word_fib(int order, netocc_word** out);
NETOCC_API netocc_status netocc_word_tm(int order, int flipped, netocc_word** out);
NETOCC_API netocc_status netocc_word_from_string(const char* data, size_t length, netocc_word** out);
NETOCC_API netocc_status netocc_word_read_file(const char* path, netocc_word** out);
NETOCC_API netocc_status netocc_word_write_file(const netocc_word* word, const char* path);
NETOCC_API size_t netocc_word_length(const netocc_word* word);
/* NUL-terminated, owned by the word. */
NETOCC_API const char* netocc_word_data(const netocc_word* word);
NETOCC_API void netocc_word_free(netocc_word* word);

/* Results carry a pass flag, JSON and text renderings, and for net-occurrence
   queries the list of spans. */
NETOCC_API netocc_status netocc_net_occurrences(const netocc_word* text, netocc_engine engine,
                                                netocc_result** out);
NETOCC_API netocc_status netocc_net_frequency(const netocc_word* text, const netocc_word* pattern,
                                              size_t* out);
NETOCC_API netocc_status netocc_occurrence_sets(netocc_family family, int order, int j, netocc_result** out);
/* kind is 'A' or 'B'. */
NETOCC_API netocc_status netocc_smallest_factorization(int order, int j, char kind, netocc_result** out);
NETOCC_API netocc_status netocc_verify_fibonacci(int max_order, netocc_result** out);
NETOCC_API netocc_status netocc_verify_thue_morse(int max_order, netocc_result** out);
NETOCC_API netocc_status netocc_onoc_check(const netocc_word* text, const netocc_span* cover, size_t count,
                                           netocc_result** out);
NETOCC_API netocc_status netocc_verify_onoc_random(uint64_t seed, size_t samples, size_t max_len,
                                                   netocc_result** out);
NETOCC_API netocc_status netocc_verify_onoc_exhaustive(size_t max_len, netocc_result** out);

NETOCC_API int netocc_result_passed(const netocc_result* result);
NETOCC_API const char* netocc_result_json(const netocc_result* result);
NETOCC_API const char* netocc_result_text(const netocc_result* result);
NETOCC_API size_t netocc_result_span_count(const netocc_result* result);
NETOCC_API netocc_status netocc_result_span(const netocc_result* result, size_t index, netocc_span* out);
NETOCC_API void netocc_result_free(netocc_result* result);

#ifdef __cplusplus
}
#endif

#endif  // NETOCC_NETOCC_H_
