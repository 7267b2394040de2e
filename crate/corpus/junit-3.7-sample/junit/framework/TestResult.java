package junit.framework;

import java.util.Vector;

/**
 * A <code>TestResult</code> collects the results of executing
 * a test case.
 *
 * @see Test
 */
public class TestResult extends Object {
	protected Vector fFailures;
	protected Vector fErrors;
	protected int fRunTests;

	public TestResult() {
		fFailures= new Vector();
		fErrors= new Vector();
		fRunTests= 0;
	}
	/**
	 * Adds an error to the list of errors. The passed in exception
	 * caused the error.
	 */
	public synchronized void addError(Test test, Throwable t) {
		fErrors.addElement(t);
	}
	/**
	 * Adds a failure to the list of failures. The passed in exception
	 * caused the failure.
	 */
	public synchronized void addFailure(Test test, AssertionFailedError t) {
		fFailures.addElement(t);
	}
	/**
	 * Informs the result that a test will be started.
	 */
	public void startTest(Test test) {
		synchronized(this) {
			fRunTests++;
		}
	}
	/**
	 * Informs the result that a test was completed.
	 */
	public void endTest(Test test) {
	}
	/**
	 * Gets the number of run tests.
	 */
	public synchronized int runCount() {
		return fRunTests;
	}
	/**
	 * Returns whether the entire test was successful or not.
	 */
	public synchronized boolean wasSuccessful() {
		return fFailures.size() == 0 && fErrors.size() == 0;
	}
}
