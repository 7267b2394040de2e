#ifndef CPPUNIT_TESTRESULT_H
#define CPPUNIT_TESTRESULT_H

#include <vector>
#include <deque>

namespace CppUnit {

class Exception;
class Test;
class TestFailure;
class TestListener;

/*! \brief Manages TestListener.
 *
 * A single instance of this class is used when running the test. It is usually
 * created by the test runner.
 *
 * This class shouldn't have to be inherited from. Use a TestListener
 * or one of its subclasses to be informed of the ongoing tests.
 *
 * \see Test, TestListener
 */
class TestResult
{
public:
    TestResult ();
    virtual ~TestResult ();

    virtual bool wasSuccessful ();
    virtual bool shouldStop ();
    virtual void stop ();

    virtual void addError (Test *test, Exception *e);
    virtual void addFailure (Test *test, Exception *e);
    virtual void startTest (Test *test);
    virtual void endTest (Test *test);
    virtual int runTests ();
    virtual int testErrors ();
    virtual int testFailures ();
    virtual std::vector<TestFailure *>& errors ();
    virtual std::vector<TestFailure *>& failures ();

    void addListener( TestListener *listener );
    void removeListener( TestListener *listener );

protected:
    typedef std::deque<TestListener *> TestListeners;
    TestListeners m_listeners;
    std::vector<TestFailure *> m_errors;
    std::vector<TestFailure *> m_failures;
    int m_runTests;
    bool m_stop;

private:
    TestResult (const TestResult& other);
    TestResult& operator= (const TestResult& other);
};

} // namespace CppUnit

#endif // CPPUNIT_TESTRESULT_H
