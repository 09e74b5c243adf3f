[closedset]
label = geo2_Jc6
source = Jc6
targets = Jc1 Jc8 Jc10 Jc12 Jc13 Jc14 Jc16 Jc24 Jc32 Jc42 Jc49
basis = e1 e2 f1 f2
condition: c[2,2,1] = 0
condition: c[1,2,1] = 0
condition: c[3,4,1] = 0
condition: c[2,4,4] = 2*c[2,2,2]-c[2,3,3]
condition: c[2,3,4]+c[3,2,4] = 0
condition: c[2,4,3]+c[4,2,3] = 0
condition: c[3,4,2]*c[2,3,4] = c[3,4,4]*c[3,4,4]
condition: c[2,2,2]*c[3,4,2]*c[3,4,2]*c[1,1,2]+(c[1,4,4]*c[3,4,2]-c[1,4,2]*c[3,4,4])*(c[1,1,1]*c[3,4,2]-c[1,4,4]*c[3,4,2]+c[1,4,2]*c[3,4,4]) = 0
