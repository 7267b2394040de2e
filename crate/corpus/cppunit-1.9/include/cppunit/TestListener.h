#ifndef CPPUNIT_TESTLISTENER_H
#define CPPUNIT_TESTLISTENER_H

namespace CppUnit {

class Exception;
class Test;

/*! \brief Listener for test progress and result.
 *
 * Implementing the Observer pattern a TestListener may be registered
 * to a TestResult to obtain information on the testing progress.
 */
class TestListener
{
public:
    virtual ~TestListener() {}

    virtual void startTest( Test *test ) {}

    virtual void addError( Test *test, Exception *e ) {}

    virtual void addFailure( Test *test, Exception *e ) {}

    virtual void endTest( Test *test ) {}
};

} // namespace CppUnit

#endif // CPPUNIT_TESTLISTENER_H
