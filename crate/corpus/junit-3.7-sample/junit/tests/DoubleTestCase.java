package junit.tests;

import junit.framework.*;

/**
 * A helper test case for testing whether the testing method
 * is run twice when it is wrapped.
 */
public class DoubleTestCase implements Test {
	private TestCase fTest;

	public DoubleTestCase(TestCase testCase) {
		fTest= testCase;
	}
	public int countTestCases() {
		return 2;
	}
	public void run(TestResult result) {
		fTest.run(result);
		fTest.run(result);
	}
}
