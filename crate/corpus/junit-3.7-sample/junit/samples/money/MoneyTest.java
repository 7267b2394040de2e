package junit.samples.money;

import junit.framework.*;

public class MoneyTest extends TestCase {
	private Money f12CHF;
	private Money f14CHF;
	private Money f7USD;
	private Money f21USD;

	public MoneyTest(String name) {
		super(name);
	}
	protected void setUp() {
		f12CHF= new Money(12, "CHF");
		f14CHF= new Money(14, "CHF");
		f7USD=  new Money( 7, "USD");
		f21USD= new Money(21, "USD");
	}
	public void testMoneyEquals() {
		assertTrue(!f12CHF.equals(null));
		Money equalMoney= new Money(12, "CHF");
		assertEquals(f12CHF, f12CHF);
		assertEquals(f12CHF, equalMoney);
		assertEquals(f12CHF.hashCode(), equalMoney.hashCode());
		assertTrue(!f12CHF.equals(f14CHF));
	}
	public void testSimpleAdd() {
		Money expected= new Money(26, "CHF");
		Money result= f12CHF.add(f14CHF);
		assertEquals(expected, result);
	}
	public void testSimpleMultiply() {
		Money expected= new Money(28, "CHF");
		assertEquals(expected, f14CHF.multiply(2));
	}
	public void testSimpleNegate() {
		Money expected= new Money(-14, "CHF");
		assertEquals(expected, f14CHF.negate());
	}
	public void testSimpleSubtract() {
		Money expected= new Money(14, "USD");
		assertEquals(expected, f21USD.subtract(f7USD));
	}
	public void testIsZero() {
		assertTrue(f12CHF.subtract(f12CHF).isZero());
	}
}
