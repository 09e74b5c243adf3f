[closedset]
label = geo1_J7
source = J7
targets = J15
basis = f1 f2 f3 e
condition: J*J <= span(x4)
