from proxnorm.utils import tic_toc, tic_toc_report_as_dataframe


@tic_toc(details=True)
def fn_foo(a1, a2, k1=None, k2='foo'):
    pass


class ClsBar:
    @tic_toc(details=False)
    def no_args(self):
        pass

    @tic_toc(details=True)
    def method_bar(self, a1, a2, k1=None, k2='foo'):
        pass


def foo():
    fn_foo(1, 2, k1='lalala')
    fn_foo('dict', {'a': 'aaa', 'b': 345})
    fn_foo('big-list', list(range(100)))
    fn_foo('ndarray', __import__('numpy').zeros((3, 4)))
    fn_foo('lambda', lambda: None)


def cls_foo():
    x = ClsBar()
    x.method_bar(1, 2, k1='foo')
    x.no_args()


def test_tic_toc():
    foo()
    cls_foo()

    df = tic_toc_report_as_dataframe()
    names = df['name'].tolist()
    assert any(name.endswith('fn_foo') for name in names)
    assert df[df['name'].str.endswith('fn_foo')]['count'].iloc[0] >= 5
    assert any(name.endswith('ClsBar.method_bar') for name in names)
