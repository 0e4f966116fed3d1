#include <stdio.h>
#include <string.h>

#include "plethysm.h"

int main(void) {
    PlethysmEngine *engine = plethysm_engine_new();
    char *value = NULL;
    if (plethysm_coefficient(engine, "4", "2", "2", &value) != PLETHYSM_STATUS_OK) {
        return 1;
    }
    printf("coeff %s\n", value);
    plethysm_string_free(value);

    uint64_t c = 0;
    if (plethysm_lr_coefficient(engine, "3,2,1", "2,1", "2,1", &c) != PLETHYSM_STATUS_OK) {
        return 1;
    }
    printf("lr %llu\n", (unsigned long long)c);

    if (plethysm_coefficient(engine, "1,2", "2", "2", &value) != PLETHYSM_STATUS_PARSE_ERROR) {
        return 1;
    }
    printf("error %s\n", plethysm_last_error());
    plethysm_engine_free(engine);
    return 0;
}
