#ifndef CPPUNIT_PORTABILITY_H
#define CPPUNIT_PORTABILITY_H

// Export macro for the shared library build. Empty for the static build.
#if defined(CPPUNIT_DLL_BUILD)
#  define CPPUNIT_API __declspec(dllexport)
#elif defined(CPPUNIT_DLL)
#  define CPPUNIT_API __declspec(dllimport)
#else
#  define CPPUNIT_API
#endif

#include <iostream>

namespace CppUnit {
typedef std::ostream OStream;
}

#define CPPUNIT_NS CppUnit

#endif // CPPUNIT_PORTABILITY_H
