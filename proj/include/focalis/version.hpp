#pragma once

#define FOCALIS_VERSION_MAJOR 0
#define FOCALIS_VERSION_MINOR 1
#define FOCALIS_VERSION_PATCH 0
#define FOCALIS_VERSION "0.1.0"
